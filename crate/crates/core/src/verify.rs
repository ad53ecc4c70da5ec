//! Built-in verification suites: self-checks of the algebraic identities the
//! calculator rests on, run on seeded random inputs.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fdalg::{
    tensor_product_dim, tor, AlgebraPreset, FDAlgebra, FDModule, ResolutionStrategy, Side,
    TorRoute,
};
use crate::functor_calc::{
    act_on_label, apply_corollary, example_c, sigma_module, tensor_tor, upsilon_source_iterated,
    AdditiveTorMatrix, SchurDatum, SigmaLabel, TorSource,
};
use crate::gf_linalg::{Matrix, PrimeField};
use crate::graded::{e_algebra, t_star, Generators, GradedSpace};
use crate::symgrp::{
    koszul_sign, GroupRepresentation, Permutation, ProjectivityPolicy, Sign, YoungComposition,
};

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown suite '{0}' (expected one of: linalg, graded, koszul, fdalg-balance, example-C, all)")]
pub struct UnknownSuite(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Linalg,
    Graded,
    Koszul,
    FdalgBalance,
    ExampleC,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["linalg", "graded", "koszul", "fdalg-balance", "example-C", "all"];

    fn leaves(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Linalg,
                Suite::Graded,
                Suite::Koszul,
                Suite::FdalgBalance,
                Suite::ExampleC,
            ],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Linalg => "linalg",
            Suite::Graded => "graded",
            Suite::Koszul => "koszul",
            Suite::FdalgBalance => "fdalg-balance",
            Suite::ExampleC => "example-C",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linalg" => Ok(Suite::Linalg),
            "graded" => Ok(Suite::Graded),
            "koszul" => Ok(Suite::Koszul),
            "fdalg-balance" => Ok(Suite::FdalgBalance),
            "example-C" | "example-c" => Ok(Suite::ExampleC),
            "all" => Ok(Suite::All),
            other => Err(UnknownSuite(other.to_string())),
        }
    }
}

/// One named check: how many instances ran and the first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            instances: 0,
            failure: None,
        }
    }

    /// Records one instance; keeps the first counterexample.
    fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(counterexample());
        }
    }

    fn fail(&mut self, msg: String) {
        self.instances += 1;
        if self.failure.is_none() {
            self.failure = Some(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Agreement tables and other informational output.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "  PASS {} ({} instances)", c.name, c.instances)?,
                Some(why) => writeln!(f, "  FAIL {} ({} instances)\n    counterexample: {why}", c.name, c.instances)?,
            }
        }
        for n in &self.notes {
            for line in n.lines() {
                writeln!(f, "  | {line}")?;
            }
        }
        let ok = self.checks.iter().filter(|c| c.passed()).count();
        writeln!(f, "{}: {ok}/{} checks passed", self.suite, self.checks.len())
    }
}

/// Runs `suite` (every leaf suite for `all`) with a deterministic seed.
pub fn run(suite: Suite, seed: u64) -> Vec<SuiteReport> {
    suite
        .leaves()
        .into_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (checks, notes) = match s {
                Suite::Linalg => (linalg(&mut rng), Vec::new()),
                Suite::Graded => (graded(&mut rng), Vec::new()),
                Suite::Koszul => (koszul(&mut rng), Vec::new()),
                Suite::FdalgBalance => (fdalg_balance(&mut rng), Vec::new()),
                Suite::ExampleC => example_c_suite(&mut rng),
                Suite::All => unreachable!("expanded above"),
            };
            SuiteReport {
                suite: s,
                checks,
                notes,
            }
        })
        .collect()
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("suite primes are prime")
}

fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, rows: usize, cols: usize) -> Matrix {
    // Sparse-ish entries so ranks vary.
    Matrix::from_fn(f, rows, cols, |_, _| {
        if rng.gen_bool(0.4) {
            rng.gen_range(0..f.p())
        } else {
            0
        }
    })
}

/// Random graded space of the given truncation with dims in `0..=max_dim`.
pub fn random_graded(rng: &mut impl Rng, truncation: usize, max_dim: usize) -> GradedSpace {
    let dims: Vec<usize> = (0..=truncation).map(|_| rng.gen_range(0..=max_dim)).collect();
    GradedSpace::from_dims(truncation, &dims)
}

fn linalg(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut transpose = Check::new("rank(A) = rank(Aᵀ)");
    let mut nullity = Check::new("rank + nullity = columns, A·N = 0");
    let mut kron = Check::new("rank(A ⊗ B) = rank(A)·rank(B)");
    for &p in &[2u64, 3, 5, 7] {
        let f = gf(p);
        for _ in 0..25 {
            let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let a = random_matrix(rng, f, r, c);
            let rank = a.rank();
            transpose.expect(rank == a.transpose().rank(), || format!("{a:?}"));
            let n = a.nullspace_basis();
            nullity.expect(rank + n.cols() == c && a.mul(&n).is_zero(), || format!("{a:?}"));
            let (br, bc) = (rng.gen_range(1..4), rng.gen_range(1..4));
            let b = random_matrix(rng, f, br, bc);
            kron.expect(a.kronecker(&b).rank() == rank * b.rank(), || format!("{a:?} ⊗ {b:?}"));
        }
    }
    vec![transpose, nullity, kron]
}

fn graded(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut finite = Check::new("E*_r: dimension 1 exactly in degrees 2i, i < p^r");
    for &p in &[2u32, 3, 5] {
        for r in 1..=3u32 {
            let pr = (p as usize).pow(r);
            let d = 2 * pr + 6;
            let dims = e_algebra(gf(p as u64), Generators::Finite(r as usize), d).dims();
            let expected: Vec<usize> =
                (0..=d).map(|n| usize::from(n % 2 == 0 && n / 2 < pr)).collect();
            finite.expect(dims.dims() == expected.as_slice(), || {
                format!("p={p} r={r}: got {dims}")
            });
        }
    }
    let mut infinite = Check::new("E*_∞ = T_* degreewise");
    for &p in &[2u64, 3, 5] {
        let e = e_algebra(gf(p), Generators::Infinite, 40).dims();
        infinite.expect(e == t_star(40), || format!("p={p}: got {e}"));
    }
    let mut assoc = Check::new("E* product associative and commutative");
    for &p in &[2u64, 3] {
        let alg = e_algebra(gf(p), Generators::Infinite, 20);
        let basis = alg.basis();
        for (a, b) in basis.iter().cartesian_product(basis) {
            assoc.expect(alg.multiply(a, b) == alg.multiply(b, a), || format!("{a}·{b}"));
            for c in basis {
                let left = alg.multiply(a, b).and_then(|ab| alg.multiply(&ab, c));
                let right = alg.multiply(b, c).and_then(|bc| alg.multiply(a, &bc));
                assoc.expect(left == right, || format!("({a}·{b})·{c}"));
            }
        }
    }
    let mut kunneth = Check::new("Künneth product commutative, associative, unital");
    for _ in 0..50 {
        let d = rng.gen_range(0..12);
        let (x, y, z) = (random_graded(rng, d, 3), random_graded(rng, d, 3), random_graded(rng, d, 3));
        kunneth.expect(
            x.tensor(&y) == y.tensor(&x)
                && x.tensor(&y).tensor(&z) == x.tensor(&y.tensor(&z))
                && x.tensor(&GradedSpace::unit(d)) == x,
            || format!("{x} / {y} / {z}"),
        );
    }
    vec![finite, infinite, assoc, kunneth]
}

/// Checks the right action axioms of `𝔖_𝐝 × 𝔖_𝐞` on one label, exhaustively
/// over group elements. Returns the number of instances checked or the first
/// counterexample.
pub fn action_axioms_on_label(
    label: &SigmaLabel,
    taus: &[Permutation],
    mus: &[Permutation],
) -> Result<usize, String> {
    let d = label.sigma.degree();
    let id = Permutation::identity(d);
    let (fixed, s) = act_on_label(label, &id, &id);
    if fixed != *label || s != Sign::Plus {
        return Err(format!("x·id ≠ x for {label}"));
    }
    let mut count = 1;
    for (t1, m1) in taus.iter().cartesian_product(mus) {
        let (once, s1) = act_on_label(label, t1, m1);
        for (t2, m2) in taus.iter().cartesian_product(mus) {
            let (twice, s2) = act_on_label(&once, t2, m2);
            let (direct, s) = act_on_label(label, &t1.compose(t2), &m1.compose(m2));
            count += 1;
            if twice != direct || s1 * s2 != s {
                return Err(format!(
                    "x = {label}, g = ({t1}, {m1}), h = ({t2}, {m2}): (x·g)·h = {}{twice}, x·(gh) = {}{direct}",
                    if s1 * s2 == Sign::Plus { "+" } else { "-" },
                    if s == Sign::Plus { "+" } else { "-" },
                ));
            }
        }
    }
    Ok(count)
}

/// Every composition of `n` (ordered, positive parts); `[]` for `n = 0`.
pub fn compositions(n: usize) -> Vec<YoungComposition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in 1..=n {
            prefix.push(k);
            rec(n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|parts| YoungComposition::new(parts).expect("positive parts"))
        .collect()
}

fn koszul(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut sort = Check::new("Koszul sign = sign of sorting graded factors");
    let mut cocycle = Check::new("ε(μν, x) = ε(μ, x)·ε(ν, x·μ)");
    for d in 0..=4 {
        let perms = YoungComposition::full(d).enumerate().expect("d ≤ 4");
        for _ in 0..5 {
            let degs: Vec<usize> = (0..d).map(|_| rng.gen_range(0..4)).collect();
            for mu in &perms {
                // Oracle: bubble-sort the permuted list back, swapping signs.
                let mut seq: Vec<(usize, usize)> = (0..d).map(|i| (mu.apply(i), degs[mu.apply(i)])).collect();
                let mut odd = false;
                for i in 0..d {
                    for j in 0..d - 1 - i {
                        if seq[j].0 > seq[j + 1].0 {
                            odd ^= seq[j].1 % 2 == 1 && seq[j + 1].1 % 2 == 1;
                            seq.swap(j, j + 1);
                        }
                    }
                }
                sort.expect(koszul_sign(mu, &degs) == Sign::from_odd(odd), || format!("μ={mu} degrees={degs:?}"));
                for nu in &perms {
                    let moved: Vec<usize> = (0..d).map(|i| degs[mu.apply(i)]).collect();
                    cocycle.expect(
                        koszul_sign(&mu.compose(nu), &degs) == koszul_sign(mu, &degs) * koszul_sign(nu, &moved),
                        || format!("μ={mu} ν={nu} degrees={degs:?}"),
                    );
                }
            }
        }
    }

    let mut axiom = Check::new("right action axioms on labeled bases, |𝐝| = |𝐞| ≤ 3");
    let mut generators = Check::new("generator matrices satisfy the Coxeter relations");
    let mut vanish = Check::new("𝕋_* vanishes for |𝐝| ≠ |𝐞| ≤ 3");
    for (d, e) in (0..=3).cartesian_product(0..=3) {
        for (pi, rho) in compositions(d).into_iter().cartesian_product(compositions(e)) {
            if d != e {
                let f = gf(5);
                let input = AdditiveTorMatrix::new(
                    pi.clone(),
                    rho.clone(),
                    vec![vec![random_graded(rng, 6, 2); rho.parts().len()]; pi.parts().len()],
                    vec![vec![TorSource::UserSupplied; rho.parts().len()]; pi.parts().len()],
                    6,
                );
                let out = input.and_then(|input| {
                    tensor_tor(
                        &input,
                        &GroupRepresentation::trivial(pi.clone(), f),
                        &GroupRepresentation::trivial(rho.clone(), f),
                        ProjectivityPolicy::default(),
                    )
                });
                vanish.expect(matches!(&out, Ok(o) if o.space.is_zero()), || format!("{pi} vs {rho}: {out:?}"));
                continue;
            }
            let taus = pi.enumerate().expect("d ≤ 3");
            let mus = rho.enumerate().expect("e ≤ 3");
            let sigmas = YoungComposition::full(d).enumerate().expect("d ≤ 3");
            for _ in 0..20 {
                let degs: Vec<usize> = (0..d).map(|_| rng.gen_range(0..6)).collect();
                for sigma in &sigmas {
                    let label = SigmaLabel {
                        sigma: sigma.clone(),
                        factors: degs.iter().map(|&g| (g, rng.gen_range(0..2))).collect(),
                    };
                    match action_axioms_on_label(&label, &taus, &mus) {
                        Ok(n) => {
                            axiom.instances += n;
                        }
                        Err(why) => axiom.fail(why),
                    }
                }
            }
            let entries = vec![vec![random_graded(rng, 5, 2); rho.parts().len()]; pi.parts().len()];
            let sources = vec![vec![TorSource::UserSupplied; rho.parts().len()]; pi.parts().len()];
            match AdditiveTorMatrix::new(pi.clone(), rho.clone(), entries, sources, 5)
                .and_then(|m| sigma_module(&m))
                .and_then(|m| m.check_relations())
            {
                Ok(()) => generators.instances += 1,
                Err(e) => generators.fail(format!("{pi} × {rho}: {e}")),
            }
        }
    }
    vec![sort, cocycle, axiom, generators, vanish]
}

/// Preset algebras of dimension at most 4.
pub fn small_presets() -> Vec<AlgebraPreset> {
    use AlgebraPreset::*;
    vec![
        Field(2),
        Field(3),
        DualNumbers(2),
        DualNumbers(3),
        TruncatedPoly(2, 3),
        TruncatedPoly(3, 4),
        GroupAlgebraCyclic(2, 2),
        GroupAlgebraCyclic(3, 3),
        GroupAlgebraCyclic(2, 4),
        ProductFields(2, 2),
        ProductFields(3, 3),
        Gf4OverGf2,
        UpperTriangular(2),
        UpperTriangular(3),
    ]
}

/// A random module of dimension `1..=max_dim`: a quotient of the regular
/// module by a random one-sided ideal, possibly summed with a character.
pub fn random_module(
    rng: &mut impl Rng,
    algebra: &FDAlgebra,
    side: Side,
    max_dim: usize,
) -> FDModule {
    let f = algebra.field();
    let n = algebra.dim();
    loop {
        let gens: Vec<Vec<u32>> = (0..rng.gen_range(0..=2))
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.p())).collect())
            .collect();
        let Ok(mut m) = FDModule::regular_quotient(algebra, side, &gens) else {
            continue;
        };
        if m.dim() < max_dim && rng.gen_bool(0.3) {
            if let Ok(k) = FDModule::trivial(algebra, side) {
                m = m.direct_sum(&k).expect("same side");
            }
        }
        if (1..=max_dim).contains(&m.dim()) {
            return m;
        }
    }
}

fn fdalg_balance(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut balance = Check::new("Tor(M, N) same resolving either argument");
    let mut minimal = Check::new("Tor independent of resolution strategy");
    let mut degree0 = Check::new("Tor_0 = coequalizer M ⊗_A N");
    for preset in small_presets() {
        let a = preset.build().expect("preset builds");
        for _ in 0..4 {
            let m = random_module(rng, &a, Side::Right, 3);
            let n = random_module(rng, &a, Side::Left, 3);
            let run = |strategy, route| tor(&a, &m, &n, 8, strategy, route);
            let results = [
                run(ResolutionStrategy::Greedy, TorRoute::ResolveFirst),
                run(ResolutionStrategy::Minimal, TorRoute::ResolveFirst),
                run(ResolutionStrategy::Greedy, TorRoute::ResolveSecond),
                run(ResolutionStrategy::Minimal, TorRoute::ResolveSecond),
            ];
            let ctx = || format!("{preset}, dim M = {}, dim N = {}", m.dim(), n.dim());
            match results.iter().cloned().collect::<Result<Vec<_>, _>>() {
                Err(e) => balance.fail(format!("{}: {e}", ctx())),
                Ok(r) => {
                    balance.expect(r[0] == r[2] && r[1] == r[3], || format!("{}: {} vs {}", ctx(), r[0], r[2]));
                    minimal.expect(r[0] == r[1] && r[2] == r[3], || format!("{}: {} vs {}", ctx(), r[0], r[1]));
                    let direct = tensor_product_dim(&a, &m, &n);
                    degree0.expect(direct.as_ref().ok() == Some(&r[0].dim(0)), || {
                        format!("{}: Tor_0 = {}, coequalizer {direct:?}", ctx(), r[0].dim(0))
                    });
                }
            }
        }
    }
    vec![balance, minimal, degree0]
}

/// The representation named by `kind` for `𝔖_d`: trivial, sign or standard.
pub fn named_rep(kind: &str, d: usize, f: PrimeField) -> GroupRepresentation {
    let g = YoungComposition::full(d);
    match kind {
        "trivial" => GroupRepresentation::trivial(g, f),
        "sign" => GroupRepresentation::sign(g, f),
        _ => GroupRepresentation::standard(d, f).expect("d ≥ 1"),
    }
}

/// `tensor_tor` with `U` trivial against `schur_apply ∘ apply_corollary` on one
/// additive Tor input.
pub fn example_c_paths(
    additive: &GradedSpace,
    v: &GroupRepresentation,
) -> Result<(GradedSpace, GradedSpace), String> {
    let f = v.field();
    let d = v.group().total();
    let full = apply_corollary(additive).space;
    let input = AdditiveTorMatrix::uniform(d, d, full, TorSource::Comparison);
    let u = GroupRepresentation::trivial(YoungComposition::full(d), f);
    let pol = ProjectivityPolicy::default();
    let left = tensor_tor(&input, &u, v, pol).map_err(|e| e.to_string())?.space;
    let datum = SchurDatum::new(v.clone()).map_err(|e| e.to_string())?;
    let right = example_c(additive, &datum, pol).map_err(|e| e.to_string())?.space;
    Ok((left, right))
}

fn example_c_suite(rng: &mut ChaCha8Rng) -> (Vec<Check>, Vec<String>) {
    let mut agree = Check::new("coinvariants of ⊕_σ 𝕋^σ = F̃_V(additive Tor ⊗ T_*)");
    let mut notes = Vec::new();
    for &p in &[5u64, 7] {
        let f = gf(p);
        for d in 2..=3 {
            for kind in ["trivial", "sign", "standard"] {
                let v = named_rep(kind, d, f);
                let mut table = String::new();
                let _ = writeln!(table, "p={p} d={d} V={kind}({d})");
                for _ in 0..10 {
                    let add = random_graded(rng, 8, 3);
                    match example_c_paths(&add, &v) {
                        Ok((left, right)) => {
                            let _ = writeln!(
                                table,
                                "  input {:?} -> {:?} {}",
                                add.dims(),
                                left.dims(),
                                if left == right { "agree" } else { "DISAGREE" }
                            );
                            agree.expect(left == right, || {
                                format!("p={p} d={d} V={kind} input {:?}: {:?} vs {:?}", add.dims(), left.dims(), right.dims())
                            });
                        }
                        Err(e) => agree.fail(format!("p={p} d={d} V={kind}: {e}")),
                    }
                }
                notes.push(table);
            }
        }
    }
    let mut upsilon = Check::new("k[𝔖_d] ⊗ B^⊗d matches the ⊕_σ construction");
    for d in 1..=3 {
        for _ in 0..3 {
            let b = random_graded(rng, 6, 2);
            let iter = upsilon_source_iterated(&b, d);
            let generic = sigma_module(&AdditiveTorMatrix::uniform(d, d, b.clone(), TorSource::UserSupplied));
            match (iter, generic) {
                (Ok(i), Ok(g)) => {
                    let factorial: usize = (1..=d).product();
                    let power = (1..d).fold(b.clone(), |acc, _| acc.tensor(&b)).scaled(factorial);
                    upsilon.expect(
                        i.space().dims_only() == power
                            && g.space().dims_only() == power
                            && i.check_relations().is_ok(),
                        || format!("d={d} B={b}"),
                    );
                }
                (i, g) => upsilon.fail(format!("d={d} B={b}: {:?} / {:?}", i.err(), g.err())),
            }
        }
    }
    (vec![agree, upsilon], notes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("unknown".parse::<Suite>().is_err());
    }

    #[test]
    fn compositions_are_counted() {
        assert_eq!(compositions(0).len(), 1);
        assert_eq!(compositions(3).len(), 4);
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn fast_suites_pass() {
        for s in [Suite::Linalg, Suite::Graded, Suite::Koszul] {
            for report in run(s, DEFAULT_SEED) {
                assert!(report.passed(), "{report}");
            }
        }
    }

    #[test]
    fn failures_keep_first_counterexample() {
        let mut c = Check::new("x");
        c.expect(true, || unreachable!());
        c.expect(false, || "first".into());
        c.expect(false, || "second".into());
        assert_eq!(c.instances, 3);
        assert_eq!(c.failure.as_deref(), Some("first"));
    }
}
