//! Exhaustive and randomized property sweeps, one per verified claim. Each
//! returns a [`Report`] whose counterexamples are full object records.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{check_axioms, enumerate_hom, size_bound};
use crate::forest::{enumerate_forests, forest_maps, is_forest_map, OrderedForest};
use crate::kan::{
    counit_check, detect_weak_equivalence, pullback_presheaf, pushforward_functor,
    representable_presheaf, unit_check, PresheafMap,
};
use crate::linalg::RationalMatrix;
use crate::morphism::{
    boundary_cocones, check_cocone, explore_reductions, factor_cocone, raw_graft, reduce,
    ForestMorphism,
};
use crate::normalization::{gamma, normalize, to_epi_functor, EpiFunctor};
use crate::oracle;
use crate::random::{random_complex, random_epi_functor, random_natural_map_mixed, seeded};
use crate::shadow::{
    check_pi_functor, compose_surjections, duality, enumerate_surjections, forest_of, from_cuts,
    is_height_one, sigma_of, Surjection,
};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub pass: bool,
    pub counterexamples: Vec<Value>,
    pub counts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub elapsed_ms: u128,
}

impl Report {
    /// A report for a single computation with nothing to refute.
    pub fn outcome(command: &str, parameters: Value, result: Value, start: Instant) -> Self {
        Report {
            command: command.into(),
            parameters,
            pass: true,
            counterexamples: Vec::new(),
            counts: BTreeMap::new(),
            result: Some(result),
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

struct Builder {
    command: String,
    parameters: Value,
    counterexamples: Vec<Value>,
    counts: BTreeMap<String, Value>,
    start: Instant,
}

impl Builder {
    fn new(command: &str, parameters: Value) -> Self {
        Builder {
            command: command.into(),
            parameters,
            counterexamples: Vec::new(),
            counts: BTreeMap::new(),
            start: Instant::now(),
        }
    }

    fn count(&mut self, key: &str, value: impl Serialize) {
        self.counts.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable"),
        );
    }

    fn fail(&mut self, value: Value) {
        self.counterexamples.push(value);
    }

    fn finish(self) -> Report {
        Report {
            command: self.command,
            parameters: self.parameters,
            pass: self.counterexamples.is_empty(),
            counterexamples: self.counterexamples,
            counts: self.counts,
            result: None,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// Every forest up to `max_size`, as boundary-labelled morphisms.
fn all_morphisms(max_size: usize) -> Vec<ForestMorphism> {
    (1..=max_size)
        .flat_map(enumerate_forests)
        .map(|f| ForestMorphism::from_forest(f).expect("nonempty"))
        .collect()
}

fn composable(morphisms: &[ForestMorphism]) -> Vec<(&ForestMorphism, &ForestMorphism)> {
    let mut out = Vec::new();
    for f in morphisms {
        for g in morphisms.iter().filter(|g| g.cod() == f.dom()) {
            out.push((f, g));
        }
    }
    out
}

/// Decomposition into trees, on every forest produced by the oracle.
pub fn decomposition(max_size: usize) -> Report {
    let mut b = Builder::new("check decomposition", json!({ "max_size": max_size }));
    let mut per_size = Vec::new();
    for size in 0..=max_size {
        let forests = oracle::forests_by_parent_functions(size);
        let mut generated = enumerate_forests(size);
        generated.sort();
        if forests != generated {
            b.fail(json!({ "size": size, "reason": "generator and oracle disagree" }));
        }
        let bad: Vec<Value> = forests
            .par_iter()
            .filter_map(|f| {
                let failures = f.decompose().verify(f);
                (!failures.is_empty())
                    .then(|| json!({ "forest": f.to_record(), "failures": failures }))
            })
            .collect();
        per_size.push(forests.len());
        b.counterexamples.extend(bad);
    }
    b.count("forests_per_size", per_size);
    b.finish()
}

/// Raw grafts validate, with boundary strata carried by the structure maps.
pub fn graft_soundness(max_size: usize) -> Report {
    let mut b = Builder::new("check graft", json!({ "max_size": max_size }));
    let morphisms = all_morphisms(max_size);
    let pairs = composable(&morphisms);
    let bad: Vec<Value> = pairs
        .par_iter()
        .filter_map(|&(f, g)| {
            let record = || json!({ "f": f.to_record(), "g": g.to_record() });
            let Ok(graft) = raw_graft(f, g) else {
                return Some(json!({ "pair": record(), "reason": "graft rejected" }));
            };
            let h = &graft.h;
            if !oracle::is_ordered_forest(h.size(), h.covers()) {
                return Some(json!({ "pair": record(), "reason": "oracle rejects H" }));
            }
            let mut maxima: Vec<usize> =
                g.forest().maxima().iter().map(|&x| graft.j_g[x]).collect();
            let mut minima: Vec<usize> =
                f.forest().minima().iter().map(|&x| graft.j_f[x]).collect();
            maxima.sort_unstable();
            minima.sort_unstable();
            if h.maxima() != maxima || h.minima() != minima {
                return Some(json!({ "pair": record(), "reason": "boundary strata moved" }));
            }
            None
        })
        .collect();
    b.counterexamples = bad;
    b.count("morphisms", morphisms.len());
    b.count("composable_pairs", pairs.len());
    b.finish()
}

/// Cocones into every small target biject with maps out of the graft.
pub fn universal_property(max_size: usize, max_target: usize, cross_check: bool) -> Report {
    let mut b = Builder::new(
        "check universal",
        json!({ "max_size": max_size, "max_target": max_target, "oracle": cross_check }),
    );
    let morphisms = all_morphisms(max_size);
    let pairs = composable(&morphisms);
    let targets: Vec<OrderedForest> = (0..=max_target).flat_map(enumerate_forests).collect();
    let results: Vec<(usize, usize, Vec<Value>)> = pairs
        .par_iter()
        .map(|&(f, g)| {
            let graft = raw_graft(f, g).expect("composable");
            let mut cocones_seen = 0;
            let mut oracle_runs = 0;
            let mut bad = Vec::new();
            for q in &targets {
                let record = || json!({ "f": f.to_record(), "g": g.to_record(), "q": q.to_record() });
                let cocones = boundary_cocones(f, g, q);
                let maps = forest_maps(&graft.h, q);
                cocones_seen += cocones.len();
                if cross_check && q.size().pow(graft.h.size() as u32) <= 20_000 {
                    oracle_runs += 1;
                    if oracle::order_maps(&graft.h, q) != maps {
                        bad.push(json!({ "instance": record(), "reason": "forest maps disagree with oracle" }));
                    }
                }
                // every factorization restricts to a cocone
                let mut restricted: Vec<(Vec<usize>, Vec<usize>)> = maps
                    .iter()
                    .map(|u| {
                        (graft.j_f.iter().map(|&x| u[x]).collect(), graft.j_g.iter().map(|&x| u[x]).collect())
                    })
                    .collect();
                for (fm, gm) in &restricted {
                    if check_cocone(f, g, q, fm, gm).is_err() {
                        bad.push(json!({ "instance": record(), "reason": "restriction is not a cocone", "f_map": fm, "g_map": gm }));
                    }
                }
                restricted.sort();
                let before = restricted.len();
                restricted.dedup();
                if restricted.len() != before {
                    bad.push(json!({ "instance": record(), "reason": "two factorizations restrict to one cocone" }));
                }
                // every cocone factors, through a map restricting back to it
                for (fm, gm) in &cocones {
                    match factor_cocone(&graft, fm, gm, q) {
                        Ok(u) => {
                            let back_f: Vec<usize> = graft.j_f.iter().map(|&x| u[x]).collect();
                            let back_g: Vec<usize> = graft.j_g.iter().map(|&x| u[x]).collect();
                            if &back_f != fm || &back_g != gm || !is_forest_map(&graft.h, q, &u) {
                                bad.push(json!({ "instance": record(), "reason": "factorization does not restrict back" }));
                            }
                        }
                        Err(e) => bad.push(json!({ "instance": record(), "reason": e.to_string(), "f_map": fm, "g_map": gm })),
                    }
                }
                if cocones.len() != maps.len() {
                    bad.push(json!({ "instance": record(), "reason": "counts differ", "cocones": cocones.len(), "factorizations": maps.len() }));
                }
            }
            (cocones_seen, oracle_runs, bad)
        })
        .collect();
    let mut total = 0;
    let mut oracle_runs = 0;
    for (c, o, bad) in results {
        total += c;
        oracle_runs += o;
        b.counterexamples.extend(bad);
    }
    b.count("composable_pairs", pairs.len());
    b.count("targets", targets.len());
    b.count("cocones", total);
    b.count("oracle_comparisons", oracle_runs);
    b.finish()
}

/// Unique normal form under every contraction order.
pub fn confluence(max_size: usize) -> Report {
    let mut b = Builder::new("check confluence", json!({ "max_size": max_size }));
    let mut per_size = Vec::new();
    let mut longest = 0;
    for size in 0..=max_size {
        let forests = enumerate_forests(size);
        let results: Vec<(usize, Option<Value>)> = forests
            .par_iter()
            .map(|f| match explore_reductions(f) {
                Ok(outcome) => {
                    let ok = outcome.is_confluent() && outcome.normal_forms.iter().next() == reduce(f).ok().as_ref();
                    let bad = (!ok).then(|| {
                        json!({
                            "forest": f.to_record(),
                            "normal_forms": outcome.normal_forms.iter().map(|n| n.to_record()).collect::<Vec<_>>(),
                        })
                    });
                    (outcome.longest, bad)
                }
                Err(e) => (0, Some(json!({ "forest": f.to_record(), "error": e.to_string() }))),
            })
            .collect();
        for (l, bad) in results {
            longest = longest.max(l);
            b.counterexamples.extend(bad);
        }
        per_size.push(forests.len());
    }
    b.count("forests_per_size", per_size);
    b.count("longest_reduction", longest);
    b.finish()
}

pub fn category_axioms(unit_max: usize, assoc_max: usize) -> Report {
    let mut b = Builder::new(
        "check axioms",
        json!({ "unit_max": unit_max, "assoc_max": assoc_max }),
    );
    let r = check_axioms(unit_max, assoc_max);
    b.count("unit_checks", r.unit_checks);
    b.count("associativity_checks", r.assoc_checks);
    for c in r.counterexamples {
        b.fail(json!({ "law": c.law, "morphisms": c.morphisms.iter().map(|m| m.to_record()).collect::<Vec<_>>() }));
    }
    b.finish()
}

/// Hom enumeration against the oracle, plus the size bound.
///
/// The oracle lists every forest up to `oracle_size` elements; the plane
/// forest generator is swept further, up to `sweep_size`.
pub fn hom_enumeration(max_object: usize, oracle_size: usize, sweep_size: usize) -> Report {
    let mut b = Builder::new(
        "check hom",
        json!({ "max": max_object, "oracle_size": oracle_size, "sweep_size": sweep_size }),
    );
    let mut by_type: BTreeMap<(usize, usize), Vec<ForestMorphism>> = BTreeMap::new();
    for size in 1..=oracle_size {
        for f in oracle::forests_by_parent_functions(size) {
            if oracle::is_reduced(f.size(), f.covers()) {
                let m = ForestMorphism::from_forest(f).expect("nonempty");
                by_type.entry((m.dom(), m.cod())).or_default().push(m);
            }
        }
    }
    let mut counts = BTreeMap::new();
    for m in 0..=max_object {
        for n in 0..=max_object {
            let hom = enumerate_hom(m, n);
            let bound = size_bound(m, n);
            let mut expected: Vec<ForestMorphism> = by_type
                .get(&(m, n))
                .map(|v| v.iter().filter(|f| f.size() <= bound).cloned().collect())
                .unwrap_or_default();
            expected.sort();
            if oracle_size < bound {
                b.fail(json!({ "m": m, "n": n, "reason": "oracle size below the bound" }));
            }
            if hom.morphisms != expected {
                b.fail(
                    json!({ "m": m, "n": n, "enumerated": hom.len(), "oracle": expected.len() }),
                );
            }
            if (m > n) != hom.is_empty() {
                b.fail(json!({ "m": m, "n": n, "reason": "emptiness is not m > n" }));
            }
            counts.insert(format!("{m},{n}"), hom.len());
        }
    }
    if enumerate_hom(0, 0).len() != 2 {
        b.fail(json!({ "reason": "|Hom([0],[0])| != 2" }));
    }
    for ((m, n), fs) in &by_type {
        if let Some(f) = fs.iter().find(|f| f.size() > size_bound(*m, *n)) {
            b.fail(json!({ "reason": "oracle forest above the bound", "forest": f.to_record() }));
        }
    }
    let sweep: Vec<Value> = (1..=sweep_size)
        .into_par_iter()
        .flat_map_iter(|size| {
            enumerate_forests(size).into_iter().filter_map(move |f| {
                let m = ForestMorphism::from_forest(f).expect("nonempty");
                (m.is_reduced() && m.size() > size_bound(m.dom(), m.cod()))
                    .then(|| json!({ "reason": "reduced forest above the bound", "forest": m.to_record() }))
            })
        })
        .collect();
    b.counterexamples.extend(sweep);
    b.count("hom_counts", counts);
    b.finish()
}

/// The shadow calculus on surjections and height-one representatives.
pub fn shadow_calculus(max_object: usize, max_n: usize, max_count: usize) -> Report {
    let mut b = Builder::new(
        "check shadow",
        json!({ "max": max_object, "max_n": max_n, "max_count": max_count }),
    );
    let mut morphisms = 0;
    for m in 0..=max_object {
        for n in 0..=max_object {
            for f in &enumerate_hom(m, n).morphisms {
                morphisms += 1;
                let forest = f.forest();
                let roots = forest.maxima();
                let below = oracle::closure(forest.size(), forest.covers());
                let values: Vec<usize> = forest
                    .minima()
                    .iter()
                    .map(|&j| {
                        roots
                            .iter()
                            .position(|&r| below[j][r])
                            .unwrap_or(usize::MAX)
                    })
                    .collect();
                match Surjection::new(n, m, values) {
                    Ok(s) if s == sigma_of(f) => {}
                    _ => b.fail(json!({ "reason": "shadow is not a valid surjection", "morphism": f.to_record() })),
                }
            }
        }
    }
    b.count("morphisms_with_shadows", morphisms);

    let mut surjections = 0;
    for n in 0..=max_n {
        for m in 0..=n {
            for s in enumerate_surjections(n, m) {
                surjections += 1;
                let fs = forest_of(&s);
                if sigma_of(&fs) != s || !fs.is_reduced() || !is_height_one(&fs) {
                    b.fail(json!({ "reason": "σ(F_σ) != σ", "surjection": s.to_record() }));
                }
            }
        }
    }
    b.count("surjections_round_tripped", surjections);

    // height-one forests are read off every forest with at most max_n + 1
    // minima, so the round trip is checked against an independent listing
    let mut height_one = 0;
    let mut with_points = 0;
    for size in 1..=2 * (max_n + 1) {
        for f in enumerate_forests(size) {
            let f = ForestMorphism::from_forest(f).expect("nonempty");
            if f.cod() > max_n || f.forest().height() > 1 {
                continue;
            }
            let back = forest_of(&sigma_of(&f));
            if is_height_one(&f) {
                height_one += 1;
                let same = if size <= 8 {
                    oracle::isomorphic_by_bijection(&back, &f)
                } else {
                    back == f
                };
                if !same || back != f {
                    b.fail(
                        json!({ "reason": "F_(σ_F) differs from F", "morphism": f.to_record() }),
                    );
                }
            } else {
                with_points += 1;
            }
        }
    }
    b.count("height_one_morphisms", height_one);
    b.count("height_at_most_one_with_point_components", with_points);
    let expected: usize = (0..=max_n).map(|n| 1 << n).sum();
    if height_one != expected {
        b.fail(json!({ "reason": "height-one count differs from surjection count", "found": height_one, "expected": expected }));
    }

    for n in 0..=max_count {
        for m in 0..=max_count {
            let listed = enumerate_surjections(n, m);
            let brute = oracle::surjections_by_brute_force(n, m);
            let mut listed_values: Vec<Vec<usize>> =
                listed.iter().map(|s| s.values().to_vec()).collect();
            listed_values.sort();
            let mut brute_sorted = brute.clone();
            brute_sorted.sort();
            if listed.len() != oracle::binomial(n, m) || listed_values != brute_sorted {
                b.fail(
                    json!({ "reason": "surjection count", "n": n, "m": m, "found": listed.len() }),
                );
            }
            let mut cuts: Vec<Vec<usize>> = listed
                .iter()
                .map(|s| duality(s).values().to_vec())
                .collect();
            cuts.sort();
            cuts.dedup();
            let valid = cuts.iter().all(|c| {
                c.len() == m && c.iter().all(|&v| v < n) && c.windows(2).all(|w| w[0] < w[1])
            });
            if cuts.len() != listed.len() || cuts.len() != oracle::binomial(n, m) || !valid {
                b.fail(
                    json!({ "reason": "duality is not a bijection onto subsets", "n": n, "m": m }),
                );
            }
            if listed.iter().any(|s| from_cuts(&duality(s)) != *s) {
                b.fail(json!({ "reason": "cuts do not reconstruct", "n": n, "m": m }));
            }
        }
    }
    let mut contravariance = 0;
    for n in 0..=max_n {
        for k in 0..=n {
            for sigma in enumerate_surjections(n, k) {
                for m in 0..=k {
                    for tau in enumerate_surjections(k, m) {
                        contravariance += 1;
                        let composite = compose_surjections(&sigma, &tau).expect("indices match");
                        let expected = duality(&sigma)
                            .compose(&duality(&tau))
                            .expect("sizes match");
                        if duality(&composite) != expected {
                            b.fail(json!({ "reason": "duality not contravariant", "sigma": sigma.to_record(), "tau": tau.to_record() }));
                        }
                    }
                }
            }
        }
    }
    b.count("contravariance_checks", contravariance);
    b.finish()
}

pub fn shadow_functor(max_object: usize) -> Report {
    let mut b = Builder::new("check pi", json!({ "max": max_object }));
    let r = check_pi_functor(max_object);
    b.count("functoriality_checks", r.functoriality_checks);
    b.count("faithfulness_witness", json!({ "endomorphisms_of_0": r.faithfulness_witness.0, "surjections_0_to_0": r.faithfulness_witness.1 }));
    for n in &r.identity_failures {
        b.fail(json!({ "reason": "σ(id) != id", "n": n }));
    }
    for (f, g) in &r.functoriality_failures {
        b.fail(json!({ "reason": "σ(F∘G) != σ_G∘σ_F", "f": f.to_record(), "g": g.to_record() }));
    }
    for s in &r.unhit_surjections {
        b.fail(json!({ "reason": "surjection not hit", "surjection": s.to_record() }));
    }
    for m in &r.bijection_failures {
        b.fail(json!({ "reason": m }));
    }
    if r.faithfulness_witness.0 <= r.faithfulness_witness.1 {
        b.fail(json!({ "reason": "no non-faithfulness witness at [0]" }));
    }
    b.finish()
}

/// `N Γ C = C` on random complexes.
pub fn normalization(seed: u64, trials: usize, top: usize, max_dim: usize) -> Report {
    let mut b = Builder::new(
        "nk-check",
        json!({ "seed": seed, "trials": trials, "top": top, "max_dim": max_dim }),
    );
    let mut rng = seeded(seed);
    for t in 0..trials {
        let n = t % (top + 1);
        let c = random_complex(&mut rng, n, max_dim);
        let g = gamma(&c);
        match normalize(&g) {
            Ok(nc) if nc == c => {}
            Ok(nc) => b.fail(
                json!({ "trial": t, "complex": c.to_record(), "normalized": nc.to_record() }),
            ),
            Err(e) => {
                b.fail(json!({ "trial": t, "complex": c.to_record(), "error": e.to_string() }))
            }
        }
        for k in 1..c.top() {
            let dd = c
                .differential(k)
                .mul(&c.differential(k + 1))
                .expect("shapes agree");
            if !dd.is_zero() {
                b.fail(json!({ "trial": t, "reason": "∂∂ != 0", "degree": k }));
            }
        }
    }
    b.count("trials", trials);
    b.finish()
}

/// Unit isomorphism over a family of test functors.
pub fn unit(seed: u64, trials: usize, truncation: usize, max_dim: usize) -> Report {
    let mut b = Builder::new(
        "kan unit",
        json!({ "seed": seed, "trials": trials, "trunc": truncation, "max_dim": max_dim }),
    );
    let mut rng = seeded(seed);
    let mut functors: Vec<(String, EpiFunctor)> = Vec::new();
    for d in 0..=max_dim {
        functors.push((format!("constant {d}"), EpiFunctor::constant(truncation, d)));
    }
    for t in 0..trials {
        functors.push((
            format!("random {t}"),
            random_epi_functor(&mut rng, truncation, max_dim),
        ));
    }
    for k in 0..=truncation {
        let x = representable_presheaf(k, truncation).expect("k within truncation");
        functors.push((
            format!("pushforward of representable {k}"),
            pushforward_functor(&x).expect("limits").functor,
        ));
    }
    for t in 0..trials.min(5) {
        let a = random_epi_functor(&mut rng, truncation, max_dim);
        let x = pullback_presheaf(&a).expect("functor");
        functors.push((
            format!("pushforward of pullback {t}"),
            pushforward_functor(&x).expect("limits").functor,
        ));
    }
    if truncation >= 1 {
        for t in 0..trials.min(5) {
            let c = random_complex(&mut rng, truncation - 1, max_dim);
            functors.push((
                format!("from complex {t}"),
                to_epi_functor(&gamma(&c)).expect("valid module"),
            ));
        }
    }
    let results: Vec<(String, Result<bool, String>, Vec<usize>)> = functors
        .par_iter()
        .map(|(name, a)| match unit_check(a) {
            Ok(r) => (name.clone(), Ok(r.passed()), a.dims().to_vec()),
            Err(e) => (name.clone(), Err(e.to_string()), a.dims().to_vec()),
        })
        .collect();
    for ((name, outcome, dims), (_, a)) in results.into_iter().zip(&functors) {
        match outcome {
            Ok(true) => {}
            Ok(false) => b.fail(json!({ "functor": name, "dims": dims, "reason": "unit not iso", "record": a.to_record() })),
            Err(e) => b.fail(json!({ "functor": name, "dims": dims, "error": e, "record": a.to_record() })),
        }
    }
    b.count("functors", functors.len());
    b.finish()
}

/// The pushed-forward counit is invertible on representables.
pub fn counit(representables: &[usize], truncation: usize) -> Report {
    let mut b = Builder::new(
        "kan counit",
        json!({ "representables": representables, "trunc": truncation }),
    );
    let mut details = Vec::new();
    for &k in representables {
        let x = match representable_presheaf(k, truncation) {
            Ok(x) => x,
            Err(e) => {
                b.fail(json!({ "k": k, "error": e.to_string() }));
                continue;
            }
        };
        match counit_check(&x) {
            Ok(r) => {
                if !r.passed() {
                    b.fail(json!({ "k": k, "report": r }));
                }
                details.push(json!({ "k": k, "dims": r.dims, "pushforward_dims": r.pushforward_dims, "counit_iso": r.counit_iso, "pushed_counit_iso": r.pushed_counit_iso }));
            }
            Err(e) => b.fail(json!({ "k": k, "error": e.to_string() })),
        }
    }
    b.count("representables", details);
    b.finish()
}

/// Detected weak equivalences agree with the original ones on restrictions.
pub fn detection(seed: u64, trials: usize, truncation: usize, max_dim: usize) -> Report {
    let mut b = Builder::new(
        "kan detect",
        json!({ "seed": seed, "trials": trials, "trunc": truncation, "max_dim": max_dim }),
    );
    let mut rng = seeded(seed);
    let maps: Vec<_> = (0..trials)
        .map(|_| random_natural_map_mixed(&mut rng, truncation, max_dim))
        .collect();
    let outcomes: Vec<Result<(bool, bool), String>> = maps
        .par_iter()
        .map(|u| {
            let direct = u.is_weak_equivalence().map_err(|e| e.to_string())?;
            let pulled = PresheafMap::pullback(u).map_err(|e| e.to_string())?;
            let detected = detect_weak_equivalence(&pulled).map_err(|e| e.to_string())?;
            Ok((direct, detected))
        })
        .collect();
    let (mut equivalences, mut others) = (0, 0);
    for (t, (u, outcome)) in maps.iter().zip(outcomes).enumerate() {
        match outcome {
            Ok((direct, detected)) => {
                if direct {
                    equivalences += 1;
                } else {
                    others += 1;
                }
                if direct != detected {
                    b.fail(json!({
                        "trial": t,
                        "direct": direct,
                        "detected": detected,
                        "source": u.source().to_record(),
                        "target": u.target().to_record(),
                        "components": u.components().iter().map(RationalMatrix::to_record).collect::<Vec<_>>(),
                    }));
                }
            }
            Err(e) => b.fail(json!({ "trial": t, "error": e })),
        }
    }
    b.count("weak_equivalences", equivalences);
    b.count("not_weak_equivalences", others);
    b.finish()
}

pub type NamedCheck = (&'static str, fn() -> Report);

/// The twelve acceptance sweeps at their stated bounds.
pub fn acceptance_suite() -> Vec<NamedCheck> {
    vec![
        ("decomposition of forests up to size 7", || decomposition(7)),
        ("graft soundness up to size 5", || graft_soundness(5)),
        ("universal property, sizes 5, targets 4", || {
            universal_property(5, 4, true)
        }),
        ("confluence up to size 8", || confluence(8)),
        ("category axioms, units 3, associativity 2", || {
            category_axioms(3, 2)
        }),
        ("hom enumeration up to [3]", || hom_enumeration(3, 9, 12)),
        ("shadow calculus", || shadow_calculus(3, 5, 6)),
        ("shadow functor on objects up to [2]", || shadow_functor(2)),
        ("normalization of 60 random complexes", || {
            normalization(2024, 60, 3, 3)
        }),
        ("unit isomorphism at truncation 2", || unit(2024, 20, 2, 3)),
        ("pushed counit on representable [0]", || counit(&[0], 2)),
        ("detection coherence, 20 maps", || detection(2024, 20, 2, 3)),
    ]
}
