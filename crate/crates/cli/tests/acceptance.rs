//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fhcalc_core::fdalg::{
    hochschild, tor, AlgebraPreset, FDAlgebra, FDModule, ResolutionStrategy, Side, TorRoute,
};
use fhcalc_core::functor_calc::{
    act_on_label, apply_corollary, schur_apply, sigma_module, tensor_tor, AdditiveTorMatrix,
    SchurDatum, SigmaLabel, TorSource,
};
use fhcalc_core::graded::{e_algebra, t_star, Generators};
use fhcalc_core::symgrp::{
    GroupRepresentation, Permutation, ProjectivityPolicy, Sign, YoungComposition,
};
use fhcalc_core::{GradedSpace, PrimeField};

type Outcome = Result<String, String>;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_s), || {
        format!("took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn random_graded(rng: &mut ChaCha8Rng, truncation: usize, max_dim: usize) -> GradedSpace {
    let dims: Vec<usize> = (0..=truncation).map(|_| rng.gen_range(0..=max_dim)).collect();
    GradedSpace::from_dims(truncation, &dims)
}

fn compositions(n: usize) -> Vec<YoungComposition> {
    if n == 0 {
        return vec![YoungComposition::new(vec![]).unwrap()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut parts = vec![first];
            parts.extend_from_slice(rest.parts());
            out.push(YoungComposition::new(parts).unwrap());
        }
    }
    out
}

/// E*_r has dimension 1 exactly in degrees 2i, i < p^r; E*_∞ agrees with T_*.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    for p in [2u64, 3, 5] {
        for r in 1..=3u32 {
            let pr = (p as usize).pow(r);
            let d = 2 * pr + 6;
            let dims = e_algebra(gf(p), Generators::Finite(r as usize), d).dims();
            for n in 0..=d {
                let expected = usize::from(n % 2 == 0 && n / 2 < pr);
                ensure(dims.dim(n) == expected, || {
                    format!("p={p} r={r} degree {n}: {} != {expected}", dims.dim(n))
                })?;
            }
        }
        let inf = e_algebra(gf(p), Generators::Infinite, 40).dims();
        ensure(inf == t_star(40), || format!("p={p}: E*_∞ = {inf}"))?;
    }
    within(start.elapsed(), 1)?;
    Ok("9 finite E*_r tables and 3 E*_∞ tables exact".into())
}

/// Dual numbers: Tor of the trivial module is 1 in every degree; the
/// comparison gives ⌊n/2⌋ + 1.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    for p in [2u64, 5] {
        let a = FDAlgebra::dual_numbers(gf(p));
        let right = FDModule::trivial(&a, Side::Right).unwrap();
        let left = FDModule::trivial(&a, Side::Left).unwrap();
        let t = tor(&a, &right, &left, 20, ResolutionStrategy::default(), TorRoute::default())
            .map_err(|e| e.to_string())?;
        ensure(t.dims().iter().all(|&x| x == 1), || format!("p={p}: Tor = {t}"))?;
        let full = apply_corollary(&t).space;
        for n in 0..=20 {
            ensure(full.dim(n) == n / 2 + 1, || format!("p={p} degree {n}: {}", full.dim(n)))?;
        }
    }
    within(start.elapsed(), 5)?;
    Ok("p ∈ {2,5}, degrees 0..20 exact".into())
}

/// Hochschild homology: a prime field and GF(4) are concentrated in degree
/// 0; the dual numbers over GF(2) are not.
fn criterion_3() -> Outcome {
    let start = Instant::now();
    let strategy = ResolutionStrategy::default();
    for p in [2u64, 3, 5] {
        let hh = hochschild(&FDAlgebra::field_algebra(gf(p)), 8, strategy).map_err(|e| e.to_string())?;
        ensure(hh == GradedSpace::unit(8), || format!("field({p}): {hh}"))?;
    }
    let hh = hochschild(&FDAlgebra::gf4_over_gf2(), 8, strategy).map_err(|e| e.to_string())?;
    ensure(hh == GradedSpace::from_dims(8, &[2]), || format!("gf4_over_gf2: {hh}"))?;
    let hh = hochschild(&FDAlgebra::dual_numbers(gf(2)), 8, strategy).map_err(|e| e.to_string())?;
    ensure((1..=8).all(|n| hh.dim(n) > 0), || format!("dual_numbers(2): {hh}"))?;
    within(start.elapsed(), 30)?;
    Ok(format!("HH(dual_numbers(2)) = {:?}", hh.dims()))
}

/// Right action axioms of 𝔖_𝐝 × 𝔖_𝐞 on the labeled basis, exhaustive over
/// group elements, 20 random degree assignments per pair.
fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checks = 0usize;
    for d in 0..=3 {
        for e in 0..=3 {
            for pi in compositions(d) {
                for rho in compositions(e) {
                    if d != e {
                        // No labels exist: ⊕_σ 𝕋^σ needs σ ∈ 𝔖_d with d = e.
                        let m = AdditiveTorMatrix::new(
                            pi.clone(),
                            rho.clone(),
                            vec![vec![GradedSpace::unit(4); rho.parts().len()]; pi.parts().len()],
                            vec![vec![TorSource::UserSupplied; rho.parts().len()]; pi.parts().len()],
                            4,
                        )
                        .unwrap();
                        ensure(sigma_module(&m).is_err(), || format!("{pi} vs {rho} built a module"))?;
                        continue;
                    }
                    let taus = pi.enumerate().unwrap();
                    let mus = rho.enumerate().unwrap();
                    let id = Permutation::identity(d);
                    for _ in 0..20 {
                        let degrees: Vec<usize> = (0..d).map(|_| rng.gen_range(0..6)).collect();
                        for sigma in YoungComposition::full(d).enumerate().unwrap() {
                            let x = SigmaLabel {
                                sigma,
                                factors: degrees.iter().map(|&g| (g, rng.gen_range(0..3))).collect(),
                            };
                            let (fixed, s) = act_on_label(&x, &id, &id);
                            ensure(fixed == x && s == Sign::Plus, || format!("x·id ≠ x for {x}"))?;
                            for g in taus.iter().flat_map(|t| mus.iter().map(move |m| (t, m))) {
                                let (xg, s1) = act_on_label(&x, g.0, g.1);
                                for h in taus.iter().flat_map(|t| mus.iter().map(move |m| (t, m))) {
                                    let (xgh, s2) = act_on_label(&xg, h.0, h.1);
                                    let (direct, s) = act_on_label(&x, &g.0.compose(h.0), &g.1.compose(h.1));
                                    checks += 1;
                                    ensure(xgh == direct && s1 * s2 == s, || {
                                        format!("x = {x}, g = ({}, {}), h = ({}, {})", g.0, g.1, h.0, h.1)
                                    })?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    within(start.elapsed(), 10)?;
    Ok(format!("{checks} instances of x·(gh) = (x·g)·h"))
}

/// Two independent routes to Tor(π*S^d ⊗ U, ρ*F_V): coinvariants of ⊕_σ 𝕋^σ
/// against U ⊗ V, and the graded Schur functor applied to additive Tor ⊗ T_*.
fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pol = ProjectivityPolicy::default();
    let mut cases = 0;
    for p in [5u64, 7] {
        let f = gf(p);
        for d in 2..=3 {
            let g = YoungComposition::full(d);
            let reps = [
                ("trivial", GroupRepresentation::trivial(g.clone(), f)),
                ("sign", GroupRepresentation::sign(g.clone(), f)),
                ("standard", GroupRepresentation::standard(d, f).unwrap()),
            ];
            let u = GroupRepresentation::trivial(g.clone(), f);
            for (name, v) in &reps {
                let datum = SchurDatum::new(v.clone()).unwrap();
                for _ in 0..10 {
                    let additive = random_graded(&mut rng, 8, 3);
                    let b = apply_corollary(&additive).space;
                    let input = AdditiveTorMatrix::uniform(d, d, b.clone(), TorSource::Comparison);
                    let left = tensor_tor(&input, &u, v, pol).map_err(|e| e.to_string())?.space;
                    let right = schur_apply(&datum, &b, pol).map_err(|e| e.to_string())?.space;
                    cases += 1;
                    ensure(left == right, || {
                        format!("p={p} d={d} V={name} input {:?}: {left} vs {right}", additive.dims())
                    })?;
                }
            }
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{cases} random inputs agree degreewise"))
}

fn random_module(rng: &mut ChaCha8Rng, a: &FDAlgebra, side: Side) -> FDModule {
    let f = a.field();
    loop {
        let gens: Vec<Vec<u32>> = (0..rng.gen_range(0..=2))
            .map(|_| (0..a.dim()).map(|_| rng.gen_range(0..f.p())).collect())
            .collect();
        let m = FDModule::regular_quotient(a, side, &gens).unwrap();
        if (1..=3).contains(&m.dim()) {
            return m;
        }
    }
}

/// Tor balance and independence of the resolution.
fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let presets = [
        "field(2)",
        "field(5)",
        "dual_numbers(2)",
        "dual_numbers(3)",
        "truncated_poly(2, 3)",
        "truncated_poly(3, 4)",
        "group_algebra_cyclic(2, 2)",
        "group_algebra_cyclic(3, 3)",
        "group_algebra_cyclic(2, 4)",
        "product_fields(2, 2)",
        "product_fields(3, 3)",
        "product_fields(2, 4)",
        "gf4_over_gf2",
        "upper_triangular(2)",
        "upper_triangular(3)",
    ];
    let mut pairs = 0;
    for name in presets {
        let a = name.parse::<AlgebraPreset>().unwrap().build().unwrap();
        assert!(a.dim() <= 4);
        for _ in 0..5 {
            let m = random_module(&mut rng, &a, Side::Right);
            let n = random_module(&mut rng, &a, Side::Left);
            let mut results = Vec::new();
            for strategy in [ResolutionStrategy::Greedy, ResolutionStrategy::Minimal] {
                for route in [TorRoute::ResolveFirst, TorRoute::ResolveSecond] {
                    results.push(tor(&a, &m, &n, 8, strategy, route).map_err(|e| e.to_string())?);
                }
            }
            pairs += 1;
            ensure(results.iter().all(|r| *r == results[0]), || {
                format!(
                    "{name}, dim M = {}, dim N = {}: {:?}",
                    m.dim(),
                    n.dim(),
                    results.iter().map(|r| r.dims().to_vec()).collect::<Vec<_>>()
                )
            })?;
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{pairs} module pairs over {} presets, 4 routes each", presets.len()))
}

/// tensor_tor vanishes whenever the arities differ.
fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = gf(5);
    let mut cases = 0;
    for d in 0..=4 {
        for e in (0..=4).filter(|&e| e != d) {
            for pi in compositions(d) {
                for rho in compositions(e) {
                    let (n, m) = (pi.parts().len(), rho.parts().len());
                    let entries = (0..n)
                        .map(|_| (0..m).map(|_| random_graded(&mut rng, 6, 3)).collect())
                        .collect();
                    let input = AdditiveTorMatrix::new(
                        pi.clone(),
                        rho.clone(),
                        entries,
                        vec![vec![TorSource::UserSupplied; m]; n],
                        6,
                    )
                    .unwrap();
                    let out = tensor_tor(
                        &input,
                        &GroupRepresentation::trivial(pi.clone(), f),
                        &GroupRepresentation::trivial(rho.clone(), f),
                        ProjectivityPolicy::default(),
                    )
                    .map_err(|e| e.to_string())?;
                    cases += 1;
                    ensure(out.space.is_zero(), || format!("{pi} vs {rho}: {}", out.space))?;
                }
            }
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{cases} composition pairs give the zero table"))
}

/// Every golden job file renders byte-identical CSV twice.
fn criterion_8() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut jobs: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    jobs.sort();
    ensure(!jobs.is_empty(), || "no golden jobs".into())?;
    let run = |job: &PathBuf| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_fhcalc"))
            .args(["run", "--format", "csv"])
            .arg(job)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{} exited {}", job.display(), out.status))?;
        Ok(out.stdout)
    };
    for job in &jobs {
        let (a, b) = (run(job)?, run(job)?);
        ensure(a == b, || format!("{} differs between runs", job.display()))?;
        ensure(a.starts_with(b"degree,dimension\n") && !a.contains(&b'\r'), || {
            format!("{} is not LF CSV with header", job.display())
        })?;
    }
    Ok(format!("{} golden jobs byte-identical", jobs.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("E* dimensions", criterion_1),
        ("truncated-ring pipeline", criterion_2),
        ("Hochschild perfectness", criterion_3),
        ("Koszul action axiom", criterion_4),
        ("Schur-functor dual-path agreement", criterion_5),
        ("Tor balance and resolution independence", criterion_6),
        ("vanishing for d ≠ e", criterion_7),
        ("determinism of golden jobs", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.2} s) — {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.2} s) — {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
