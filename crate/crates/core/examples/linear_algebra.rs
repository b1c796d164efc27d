//! Exact rational linear algebra up to homology of chain complexes.

use ordfor::linalg::{ratio, ChainComplex, ChainMap, RationalMatrix};

fn main() -> ordfor::Result<()> {
    let a = RationalMatrix::from_i64(3, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("A = {a:?}");
    println!("rank {}", a.rank());
    let k = a.kernel();
    println!("kernel {k:?}");
    assert!(a.mul(&k)?.is_zero());

    let b = RationalMatrix::from_i64(1, &[&[5], &[10], &[2]]);
    match a.solve(&b)? {
        Some(x) => println!("A x = b with x = {x:?}"),
        None => println!("no solution"),
    }
    let half = RationalMatrix::identity(2).scale(&ratio(1, 2));
    println!("half identity inverse {:?}", half.inverse());

    // The boundary of a triangle: three vertices, three edges, one face.
    let d1 = RationalMatrix::from_i64(3, &[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
    let d2 = RationalMatrix::from_i64(1, &[&[1], &[1], &[-1]]);
    let disk = ChainComplex::new(vec![3, 3, 1], vec![d1.clone(), d2])?;
    let circle = ChainComplex::new(vec![3, 3, 0], vec![d1, RationalMatrix::zeros(3, 0)])?;
    println!("disk homology {:?}", disk.homology_dims());
    println!("circle homology {:?}", circle.homology_dims());

    let inclusion = ChainMap::new(
        circle.clone(),
        disk.clone(),
        vec![
            RationalMatrix::identity(3),
            RationalMatrix::identity(3),
            RationalMatrix::zeros(1, 0),
        ],
    )?;
    println!(
        "circle -> disk quasi-iso: {}, per degree {:?}",
        inclusion.is_quasi_iso(),
        inclusion.induced_homology_isos()
    );
    println!("cone dims {:?}", inclusion.mapping_cone().dims());
    Ok(())
}
