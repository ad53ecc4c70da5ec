//! Functor-category formulas applied to graded dimension tables.
//!
//! Everything here is dimension-level: the structure isomorphisms are realized
//! as equalities of graded dimensions. Where a symmetric group acts, the
//! action is materialized on an explicit labeled basis as signed permutation
//! matrices and quotiented by exact rank computations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::gf_linalg::PrimeField;
use crate::graded::{e_algebra, t_star, Generators, GradedSpace};
use crate::symgrp::{
    coinvariants, koszul_sign, GroupRepresentation, Permutation, ProjectivityBasis,
    ProjectivityPolicy, Sign, SignedPermutation, SymError, YoungComposition,
};

/// Largest arity for which `𝕋_*` is materialized.
pub const MAX_ARITY: usize = 6;
/// Largest degreewise dimension of a materialized group module.
pub const MAX_DEGREE_DIM: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalcError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("size guard: {0}")]
    Guard(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Results a computation relies on, named by content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fact {
    ModuleTor,
    ModuleExt,
    TorComparison,
    ExtComparison,
    FrobeniusExtDims,
    Kunneth,
    TensorVanishing,
    SigmaDecomposition,
    KoszulYoungAction,
    YoungCoinvariants,
    IteratedSource,
    SchurFormula,
    StableFactorization,
    HochschildAsTor,
    HochschildPerfectness,
}

impl Fact {
    pub fn name(self) -> &'static str {
        match self {
            Fact::ModuleTor => "additive Tor = module Tor over R ⊗ k",
            Fact::ModuleExt => "additive Ext = module Ext over R ⊗ k",
            Fact::TorComparison => "Tor comparison: functor Tor = additive Tor ⊗ T_*",
            Fact::ExtComparison => "Ext comparison: functor Ext = additive Ext ⊗ E*",
            Fact::FrobeniusExtDims => "E*_r: dimension one in degrees 2i, 0 <= i < p^r",
            Fact::Kunneth => "Künneth isomorphism",
            Fact::TensorVanishing => "tensor-power vanishing: Tor(π^⊗, ρ^⊗) = 0 when d ≠ e",
            Fact::SigmaDecomposition => "Tor(π^⊗, ρ^⊗) = ⊕_σ ⊗_i Tor(π_σ(i), ρ_i)",
            Fact::KoszulYoungAction => "Koszul-signed right action of 𝔖_d × 𝔖_e",
            Fact::YoungCoinvariants => "Tor(π^⊗ ⊗_𝔖 U, ρ^⊗ ⊗_𝔖 V) = 𝕋_* ⊗_{𝔖×𝔖} (U ⊗ V)",
            Fact::IteratedSource => "⊕_σ 𝕋^σ = k[𝔖_d] ⊗ T^e for π^⊗ = π^⊗d",
            Fact::SchurFormula => "Tor(π*S^d, ρ*F_V) = F̃_V(additive Tor ⊗ T_*)",
            Fact::StableFactorization => "H_*(GL_∞; F ⊗ G) = H_*(GL_∞; k) ⊗ Tor(F, G)",
            Fact::HochschildAsTor => "HH_*(A) = Tor^{A ⊗ A^op}(A, A)",
            Fact::HochschildPerfectness => "HH_*(k) = k in degree 0 for perfect k",
        }
    }
}

/// Hypotheses a computation used or flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    CharacteristicP,
    PerfectField,
    FpLinear,
    MaschkeCoprime,
    ProjectivityAssumed,
    GfpDimensionsAuthoritative,
    UserSuppliedFunctorTor,
    UserSuppliedStableHomology,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::CharacteristicP => "k has characteristic p > 0",
            Hypothesis::PerfectField => "k perfect (finite base field)",
            Hypothesis::FpLinear => "source category F_p-linear (R of characteristic p)",
            Hypothesis::MaschkeCoprime => "U, V projective: group order prime to p (Maschke)",
            Hypothesis::ProjectivityAssumed => "U, V projective: ASSUMED by caller, unchecked",
            Hypothesis::GfpDimensionsAuthoritative => {
                "dimensions computed over GF(p); equal over any extension k by flat base change"
            }
            Hypothesis::UserSuppliedFunctorTor => "functor Tor entries supplied by the user",
            Hypothesis::UserSuppliedStableHomology => "H_*(GL_∞(R), k) supplied by the user",
        }
    }
}

/// Facts and hypotheses behind one result.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub facts: BTreeSet<Fact>,
    pub hypotheses: BTreeSet<Hypothesis>,
}

impl Provenance {
    pub fn new(facts: &[Fact], hypotheses: &[Hypothesis]) -> Self {
        Provenance {
            facts: facts.iter().copied().collect(),
            hypotheses: hypotheses.iter().copied().collect(),
        }
    }

    pub fn merge(mut self, other: &Provenance) -> Self {
        self.facts.extend(&other.facts);
        self.hypotheses.extend(&other.hypotheses);
        self
    }

    pub fn with(mut self, fact: Fact) -> Self {
        self.facts.insert(fact);
        self
    }

    pub fn with_hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypotheses.insert(h);
        self
    }

    fn projectivity(self, basis: ProjectivityBasis) -> Self {
        self.with_hypothesis(match basis {
            ProjectivityBasis::Maschke => Hypothesis::MaschkeCoprime,
            ProjectivityBasis::Assumed => Hypothesis::ProjectivityAssumed,
        })
    }
}

/// A graded dimension table together with what it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub space: GradedSpace,
    pub provenance: Provenance,
}

fn comparison_hypotheses() -> Provenance {
    Provenance::new(
        &[],
        &[
            Hypothesis::CharacteristicP,
            Hypothesis::PerfectField,
            Hypothesis::FpLinear,
            Hypothesis::GfpDimensionsAuthoritative,
        ],
    )
}

fn same_truncation(a: &GradedSpace, b: &GradedSpace) -> Result<usize, CalcError> {
    if a.truncation() != b.truncation() {
        return Err(CalcError::TruncationMismatch(a.truncation(), b.truncation()));
    }
    Ok(a.truncation())
}

/// Full functor Tor from additive Tor: Künneth product with `T_*`.
pub fn apply_corollary(additive_tor: &GradedSpace) -> Outcome {
    Outcome {
        space: additive_tor.dims_only().tensor(&t_star(additive_tor.truncation())),
        provenance: comparison_hypotheses().with(Fact::TorComparison).with(Fact::Kunneth),
    }
}

/// Dimension shadow of the Ext comparison: additive Ext ⊗ `E*_r` (or `E*_∞`).
pub fn psi_ext(additive_ext: &GradedSpace, field: PrimeField, generators: Generators) -> Outcome {
    let d = additive_ext.truncation();
    let e = e_algebra(field, generators, d).dims();
    Outcome {
        space: additive_ext.dims_only().tensor(&e),
        provenance: comparison_hypotheses()
            .with(Fact::ExtComparison)
            .with(Fact::FrobeniusExtDims)
            .with(Fact::Kunneth),
    }
}

/// `H_*(GL_∞(R), k) ⊗ Tor`, with the stable homology supplied by the caller.
pub fn gl_homology(stable: &GradedSpace, tor: &Outcome) -> Result<Outcome, CalcError> {
    same_truncation(stable, &tor.space)?;
    Ok(Outcome {
        space: stable.dims_only().tensor(&tor.space),
        provenance: tor
            .provenance
            .clone()
            .with(Fact::StableFactorization)
            .with(Fact::Kunneth)
            .with_hypothesis(Hypothesis::UserSuppliedStableHomology),
    })
}

/// Where a functor-Tor entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorSource {
    /// Given directly as a functor Tor.
    UserSupplied,
    /// Additive Tor tensored with `T_*`.
    Comparison,
}

/// The table `B[a][b] = Tor^{k[A]}(π_a, ρ_b)` for the distinct functors of
/// `π^⊗ = π_1^{⊗d_1} ⊗ ⋯` and `ρ^⊗ = ρ_1^{⊗e_1} ⊗ ⋯`. The tensor position
/// `i` carries functor `block_of(i)` of the respective composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveTorMatrix {
    pi_blocks: YoungComposition,
    rho_blocks: YoungComposition,
    entries: Vec<Vec<GradedSpace>>,
    sources: Vec<Vec<TorSource>>,
    truncation: usize,
}

impl AdditiveTorMatrix {
    /// Entries are functor Tor groups, all truncated at `truncation`.
    pub fn new(
        pi_blocks: YoungComposition,
        rho_blocks: YoungComposition,
        entries: Vec<Vec<GradedSpace>>,
        sources: Vec<Vec<TorSource>>,
        truncation: usize,
    ) -> Result<Self, CalcError> {
        let (n, m) = (pi_blocks.parts().len(), rho_blocks.parts().len());
        let shape_ok = |rows: usize, lens: Vec<usize>| rows == n && lens.iter().all(|&l| l == m);
        if !shape_ok(entries.len(), entries.iter().map(Vec::len).collect())
            || !shape_ok(sources.len(), sources.iter().map(Vec::len).collect())
        {
            return Err(CalcError::Invalid(format!(
                "Tor table must be {n}x{m} for compositions {pi_blocks} and {rho_blocks}"
            )));
        }
        for e in entries.iter().flatten() {
            if e.truncation() != truncation {
                return Err(CalcError::TruncationMismatch(e.truncation(), truncation));
            }
        }
        Ok(AdditiveTorMatrix {
            pi_blocks,
            rho_blocks,
            entries: entries
                .into_iter()
                .map(|row| row.into_iter().map(|g| g.dims_only()).collect())
                .collect(),
            sources,
            truncation,
        })
    }

    /// Builds the table from additive Tor groups, converting each by the Tor
    /// comparison.
    pub fn from_additive(
        pi_blocks: YoungComposition,
        rho_blocks: YoungComposition,
        additive: Vec<Vec<GradedSpace>>,
        truncation: usize,
    ) -> Result<Self, CalcError> {
        let sources = additive
            .iter()
            .map(|row| vec![TorSource::Comparison; row.len()])
            .collect();
        let full = additive
            .iter()
            .map(|row| row.iter().map(|g| apply_corollary(g).space).collect())
            .collect();
        Self::new(pi_blocks, rho_blocks, full, sources, truncation)
    }

    /// Every position carries the same entry.
    pub fn uniform(d: usize, e: usize, entry: GradedSpace, source: TorSource) -> Self {
        AdditiveTorMatrix {
            truncation: entry.truncation(),
            pi_blocks: YoungComposition::full(d),
            rho_blocks: YoungComposition::full(e),
            entries: if d == 0 || e == 0 {
                vec![vec![entry.dims_only(); usize::from(e > 0)]; usize::from(d > 0)]
            } else {
                vec![vec![entry.dims_only()]]
            },
            sources: if d == 0 || e == 0 {
                vec![vec![source; usize::from(e > 0)]; usize::from(d > 0)]
            } else {
                vec![vec![source]]
            },
        }
    }

    pub fn pi_blocks(&self) -> &YoungComposition {
        &self.pi_blocks
    }

    pub fn rho_blocks(&self) -> &YoungComposition {
        &self.rho_blocks
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Entry for tensor positions `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &GradedSpace {
        &self.entries[self.pi_blocks.block_of(i)][self.rho_blocks.block_of(j)]
    }

    fn provenance(&self) -> Provenance {
        let mut prov = Provenance::default();
        for s in self.sources.iter().flatten() {
            prov = match s {
                TorSource::UserSupplied => {
                    prov.with_hypothesis(Hypothesis::UserSuppliedFunctorTor)
                }
                TorSource::Comparison => prov
                    .merge(&comparison_hypotheses())
                    .with(Fact::TorComparison),
            };
        }
        prov
    }
}

/// Basis element `(degree, index)` of one tensor factor.
pub type FactorBasis = (usize, usize);

/// Label of a basis vector of `⊕_σ 𝕋^σ`: the summand `σ` and one basis element
/// per tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaLabel {
    pub sigma: Permutation,
    pub factors: Vec<FactorBasis>,
}

impl SigmaLabel {
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.0).sum()
    }

    pub fn factor_degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.0).collect()
    }
}

impl fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ={}|{}",
            self.sigma,
            self.factors.iter().map(|(d, i)| format!("x{d}.{i}")).join("⊗")
        )
    }
}

/// Right action of `(τ, μ) ∈ 𝔖_𝐝 × 𝔖_𝐞` on a label:
/// `x·(τ, μ) = ε x_{μ(1)} ⊗ ⋯ ⊗ x_{μ(d)} ∈ 𝕋^{τ⁻¹σμ}` with the Koszul sign `ε`.
pub fn act_on_label(label: &SigmaLabel, tau: &Permutation, mu: &Permutation) -> (SigmaLabel, Sign) {
    let sign = koszul_sign(mu, &label.factor_degrees());
    let sigma = tau.inverse().compose(&label.sigma).compose(mu);
    let factors = (0..mu.degree()).map(|i| label.factors[mu.apply(i)]).collect();
    (SigmaLabel { sigma, factors }, sign)
}

/// Tuples of basis elements of `spaces[0] ⊗ ⋯ ⊗ spaces[d-1]`, grouped by total
/// degree `<= truncation`, lexicographic within a degree.
fn tensor_basis(spaces: &[&GradedSpace], truncation: usize) -> Vec<Vec<Vec<FactorBasis>>> {
    let mut out = vec![Vec::new(); truncation + 1];
    let mut current = Vec::with_capacity(spaces.len());
    fn rec(
        spaces: &[&GradedSpace],
        budget: usize,
        total: usize,
        current: &mut Vec<FactorBasis>,
        out: &mut Vec<Vec<Vec<FactorBasis>>>,
    ) {
        let Some((first, rest)) = spaces.split_first() else {
            out[total].push(current.clone());
            return;
        };
        for deg in 0..=budget {
            for idx in 0..first.dim(deg) {
                current.push((deg, idx));
                rec(rest, budget - deg, total + deg, current, out);
                current.pop();
            }
        }
    }
    rec(spaces, truncation, 0, &mut current, &mut out);
    out
}

/// A labeled graded space with a right action of a product of Young subgroups,
/// given degreewise by signed permutation matrices for the Coxeter
/// generators of `group` (the concatenation `𝐝 ++ 𝐞`).
#[derive(Debug, Clone)]
pub struct GradedGroupModule {
    space: GradedSpace,
    group: YoungComposition,
    actions: Vec<Vec<SignedPermutation>>,
}

impl GradedGroupModule {
    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn group(&self) -> &YoungComposition {
        &self.group
    }

    /// `actions()[n][g]`: generator `g` on degree `n`.
    pub fn actions(&self) -> &[Vec<SignedPermutation>] {
        &self.actions
    }

    /// Checks `s² = 1`, braid and commutation relations degreewise.
    pub fn check_relations(&self) -> Result<(), CalcError> {
        let positions = self.group.coxeter_generators();
        for (n, gens) in self.actions.iter().enumerate() {
            let id = SignedPermutation::new((0..self.space.dim(n)).collect(), vec![Sign::Plus; self.space.dim(n)])?;
            for (a, ga) in gens.iter().enumerate() {
                if ga.compose(ga) != id {
                    return Err(CalcError::Invalid(format!("generator {a} is not an involution in degree {n}")));
                }
                for (b, gb) in gens.iter().enumerate().skip(a + 1) {
                    let ok = if positions[b] == positions[a] + 1 {
                        ga.compose(gb).compose(ga) == gb.compose(ga).compose(gb)
                    } else {
                        ga.compose(gb) == gb.compose(ga)
                    };
                    if !ok {
                        return Err(CalcError::Invalid(format!(
                            "generators {a}, {b} violate the Coxeter relations in degree {n}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Degreewise `self ⊗_G rep`.
    pub fn coinvariants(
        &self,
        rep: &GroupRepresentation,
        policy: ProjectivityPolicy,
    ) -> Result<GradedSpace, CalcError> {
        if rep.group() != &self.group {
            return Err(CalcError::Invalid(format!(
                "representation of {} against a module over {}",
                rep.group(),
                self.group
            )));
        }
        Ok(coinvariants(&self.space, &self.actions, rep, policy)?)
    }
}

fn check_degree_dims(dims: impl IntoIterator<Item = usize>) -> Result<(), CalcError> {
    for (n, d) in dims.into_iter().enumerate() {
        if d > MAX_DEGREE_DIM {
            return Err(CalcError::Guard(format!(
                "degree {n} has dimension {d}, above {MAX_DEGREE_DIM}"
            )));
        }
    }
    Ok(())
}

fn check_arity(d: usize) -> Result<(), CalcError> {
    if d > MAX_ARITY {
        return Err(CalcError::Guard(format!("arity {d} exceeds {MAX_ARITY}")));
    }
    Ok(())
}

/// Materializes `⊕_{σ ∈ 𝔖_d} 𝕋^σ_*` with the Koszul-signed action of
/// `𝔖_𝐝 × 𝔖_𝐞`. Requires `d = e`.
pub fn sigma_module(input: &AdditiveTorMatrix) -> Result<GradedGroupModule, CalcError> {
    let d = input.pi_blocks.total();
    if d != input.rho_blocks.total() {
        return Err(CalcError::Invalid("⊕_σ 𝕋^σ needs d = e".into()));
    }
    check_arity(d)?;
    let truncation = input.truncation();
    let group = input.pi_blocks.concat(&input.rho_blocks);
    let sigmas = YoungComposition::full(d).enumerate()?;

    let mut labels: Vec<Vec<SigmaLabel>> = vec![Vec::new(); truncation + 1];
    for sigma in &sigmas {
        let spaces: Vec<&GradedSpace> = (0..d).map(|i| input.at(sigma.apply(i), i)).collect();
        for (n, tuples) in tensor_basis(&spaces, truncation).into_iter().enumerate() {
            labels[n].extend(tuples.into_iter().map(|factors| SigmaLabel {
                sigma: sigma.clone(),
                factors,
            }));
        }
        check_degree_dims(labels.iter().map(Vec::len))?;
    }

    let identity = Permutation::identity(d);
    let moves: Vec<(Permutation, Permutation)> = input
        .pi_blocks
        .coxeter_generators()
        .into_iter()
        .map(|pos| (Permutation::adjacent(d, pos), identity.clone()))
        .chain(
            input
                .rho_blocks
                .coxeter_generators()
                .into_iter()
                .map(|pos| (identity.clone(), Permutation::adjacent(d, pos))),
        )
        .collect();

    let mut actions = Vec::with_capacity(truncation + 1);
    for degree_labels in &labels {
        let index: HashMap<&SigmaLabel, usize> =
            degree_labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let gens = moves
            .iter()
            .map(|(tau, mu)| {
                let (targets, signs) = degree_labels
                    .iter()
                    .map(|l| {
                        let (image, sign) = act_on_label(l, tau, mu);
                        (index[&image], sign)
                    })
                    .unzip();
                SignedPermutation::new(targets, signs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        actions.push(gens);
    }

    let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
    let string_labels = labels
        .iter()
        .map(|ls| ls.iter().map(ToString::to_string).collect())
        .collect();
    let space = GradedSpace::from_dims(truncation, &dims)
        .with_labels(string_labels)
        .expect("one label per basis vector");
    Ok(GradedGroupModule {
        space,
        group,
        actions,
    })
}

/// `Tor(π^⊗ ⊗_{𝔖_𝐝} U, ρ^⊗ ⊗_{𝔖_𝐞} V)`: zero when `d ≠ e`, otherwise the
/// coinvariants `𝕋_* ⊗_{𝔖_𝐝 × 𝔖_𝐞} (U ⊗ V)`.
pub fn tensor_tor(
    input: &AdditiveTorMatrix,
    u: &GroupRepresentation,
    v: &GroupRepresentation,
    policy: ProjectivityPolicy,
) -> Result<Outcome, CalcError> {
    if u.group() != input.pi_blocks() || v.group() != input.rho_blocks() {
        return Err(CalcError::Invalid(format!(
            "U over {} and V over {} do not match the compositions {} and {}",
            u.group(),
            v.group(),
            input.pi_blocks(),
            input.rho_blocks()
        )));
    }
    if u.field() != v.field() {
        return Err(CalcError::Invalid("U and V over different fields".into()));
    }
    let truncation = input.truncation();
    let base = input.provenance();
    if input.pi_blocks.total() != input.rho_blocks.total() {
        return Ok(Outcome {
            space: GradedSpace::zero(truncation),
            provenance: base.with(Fact::TensorVanishing),
        });
    }
    let uv = u.outer_tensor(v);
    let basis = policy.check(uv.group(), uv.field().p())?;
    let module = sigma_module(input)?;
    let space = module.coinvariants(&uv, policy)?;
    Ok(Outcome {
        space,
        provenance: base
            .with(Fact::SigmaDecomposition)
            .with(Fact::Kunneth)
            .with(Fact::KoszulYoungAction)
            .with(Fact::YoungCoinvariants)
            .with_hypothesis(Hypothesis::GfpDimensionsAuthoritative)
            .projectivity(basis),
    })
}

/// `k[𝔖_d] ⊗ B^{⊗d}` (group ring in degree zero) with the action
/// `(σ, x)·(τ, μ) = (τ⁻¹σμ, ε x_{μ(1)} ⊗ ⋯ ⊗ x_{μ(d)})` of `𝔖_d × 𝔖_d`.
///
/// Basis index in degree `n` is `σ_index · dim(B^{⊗d})_n + tuple_index`.
pub fn upsilon_source_iterated(b: &GradedSpace, d: usize) -> Result<GradedGroupModule, CalcError> {
    check_arity(d)?;
    let truncation = b.truncation();
    let group_elems = YoungComposition::full(d).enumerate()?;
    let position: HashMap<&Permutation, usize> =
        group_elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let factors: Vec<&GradedSpace> = vec![b; d];
    let power = tensor_basis(&factors, truncation);
    check_degree_dims(power.iter().map(|t| t.len() * group_elems.len()))?;

    let gens = YoungComposition::full(d).coxeter_generators();
    let group = YoungComposition::full(d).concat(&YoungComposition::full(d));

    let mut actions = Vec::with_capacity(truncation + 1);
    let mut labels = Vec::with_capacity(truncation + 1);
    for tuples in &power {
        let width = tuples.len();
        let tuple_index: HashMap<&Vec<FactorBasis>, usize> =
            tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut degree_actions = Vec::new();
        // Group-ring side: σ ↦ s⁻¹σ = sσ; tensor factor untouched.
        for &pos in &gens {
            let s = Permutation::adjacent(d, pos);
            let mut targets = Vec::with_capacity(width * group_elems.len());
            for sigma in &group_elems {
                let base = position[&s.compose(sigma)] * width;
                targets.extend((0..width).map(|t| base + t));
            }
            let len = targets.len();
            degree_actions.push(SignedPermutation::new(targets, vec![Sign::Plus; len])?);
        }
        // Tensor side: σ ↦ σs, adjacent factors swapped with a Koszul sign.
        for &pos in &gens {
            let s = Permutation::adjacent(d, pos);
            let swapped: Vec<(usize, Sign)> = tuples
                .iter()
                .map(|t| {
                    let mut u = t.clone();
                    u.swap(pos, pos + 1);
                    let sign = Sign::from_odd(t[pos].0 % 2 == 1 && t[pos + 1].0 % 2 == 1);
                    (tuple_index[&u], sign)
                })
                .collect();
            let mut targets = Vec::new();
            let mut signs = Vec::new();
            for sigma in &group_elems {
                let base = position[&sigma.compose(&s)] * width;
                for &(t, sign) in &swapped {
                    targets.push(base + t);
                    signs.push(sign);
                }
            }
            degree_actions.push(SignedPermutation::new(targets, signs)?);
        }
        actions.push(degree_actions);
        labels.push(
            group_elems
                .iter()
                .flat_map(|g| {
                    tuples.iter().map(move |t| {
                        format!("{g}|{}", t.iter().map(|(dg, i)| format!("x{dg}.{i}")).join("⊗"))
                    })
                })
                .collect::<Vec<String>>(),
        );
    }
    let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
    let space = GradedSpace::from_dims(truncation, &dims)
        .with_labels(labels)
        .expect("one label per basis vector");
    Ok(GradedGroupModule {
        space,
        group,
        actions,
    })
}

/// A representation `V` of `𝔖_d` defining the functor `v ↦ v^{⊗d} ⊗_{𝔖_d} V`.
#[derive(Debug, Clone)]
pub struct SchurDatum {
    arity: usize,
    rep: GroupRepresentation,
}

impl SchurDatum {
    pub fn new(rep: GroupRepresentation) -> Result<Self, CalcError> {
        if rep.group().parts().len() > 1 {
            return Err(CalcError::Invalid(format!(
                "Schur datum needs a representation of a full symmetric group, got {}",
                rep.group()
            )));
        }
        Ok(SchurDatum {
            arity: rep.group().total(),
            rep,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rep(&self) -> &GroupRepresentation {
        &self.rep
    }
}

/// `F̃_V(W) = W^{⊗d} ⊗_{𝔖_d} V` with `𝔖_d` permuting graded factors with a
/// Koszul sign.
pub fn schur_apply(
    datum: &SchurDatum,
    w: &GradedSpace,
    policy: ProjectivityPolicy,
) -> Result<Outcome, CalcError> {
    let d = datum.arity;
    check_arity(d)?;
    let basis = policy.check(datum.rep.group(), datum.rep.field().p())?;
    let truncation = w.truncation();
    let factors: Vec<&GradedSpace> = vec![w; d];
    let power = tensor_basis(&factors, truncation);
    check_degree_dims(power.iter().map(Vec::len))?;
    let positions = datum.rep.group().coxeter_generators();
    let actions = power
        .iter()
        .map(|tuples| {
            let index: HashMap<&Vec<FactorBasis>, usize> =
                tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
            positions
                .iter()
                .map(|&pos| {
                    let (targets, signs) = tuples
                        .iter()
                        .map(|t| {
                            let mut u = t.clone();
                            u.swap(pos, pos + 1);
                            let odd = t[pos].0 % 2 == 1 && t[pos + 1].0 % 2 == 1;
                            (index[&u], Sign::from_odd(odd))
                        })
                        .unzip();
                    SignedPermutation::new(targets, signs)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dims: Vec<usize> = power.iter().map(Vec::len).collect();
    let space = GradedSpace::from_dims(truncation, &dims);
    let out = coinvariants(&space, &actions, &datum.rep, policy)?;
    Ok(Outcome {
        space: out,
        provenance: Provenance::default()
            .with_hypothesis(Hypothesis::GfpDimensionsAuthoritative)
            .projectivity(basis),
    })
}

/// `Tor(π*S^d, ρ*F_V) = F̃_V(additive Tor ⊗ T_*)`.
pub fn example_c(
    additive_tor: &GradedSpace,
    datum: &SchurDatum,
    policy: ProjectivityPolicy,
) -> Result<Outcome, CalcError> {
    let full = apply_corollary(additive_tor);
    let out = schur_apply(datum, &full.space, policy)?;
    Ok(Outcome {
        space: out.space,
        provenance: full.provenance.merge(&out.provenance).with(Fact::SchurFormula),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn g(d: usize, dims: &[usize]) -> GradedSpace {
        GradedSpace::from_dims(d, dims)
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(apply_corollary(&GradedSpace::unit(6)).space, t_star(6));
        let ones = g(8, &[1; 9]);
        let expected: Vec<usize> = (0..=8).map(|n| n / 2 + 1).collect();
        assert_eq!(apply_corollary(&ones).space.dims(), expected.as_slice());
        assert!(apply_corollary(&GradedSpace::zero(5)).space.is_zero());
        assert!(apply_corollary(&ones).provenance.facts.contains(&Fact::TorComparison));
    }

    #[test]
    fn psi_ext_examples() {
        let f = gf(3);
        assert_eq!(psi_ext(&GradedSpace::unit(10), f, Generators::Infinite).space, t_star(10));
        assert!(psi_ext(&GradedSpace::zero(10), f, Generators::Infinite).space.is_zero());
        assert_eq!(
            psi_ext(&g(6, &[2]), f, Generators::Infinite).space.dims(),
            &[2, 0, 2, 0, 2, 0, 2]
        );
        let any = g(8, &[1, 2, 0, 3, 1]);
        assert_eq!(
            psi_ext(&any, f, Generators::Infinite).space,
            apply_corollary(&any).space
        );
    }

    #[test]
    fn gl_homology_examples() {
        let tor = apply_corollary(&g(6, &[1, 1, 1, 1, 1, 1, 1]));
        let unit = GradedSpace::unit(6);
        assert_eq!(gl_homology(&unit, &tor).unwrap().space, tor.space);
        let h = g(6, &[1, 0, 2, 1]);
        let trivial_tor = Outcome {
            space: GradedSpace::unit(6),
            provenance: Provenance::default(),
        };
        assert_eq!(gl_homology(&h, &trivial_tor).unwrap().space, h);
        let ts = Outcome {
            space: t_star(8),
            provenance: Provenance::default(),
        };
        assert_eq!(
            gl_homology(&t_star(8), &ts).unwrap().space.dims(),
            &[1, 0, 2, 0, 3, 0, 4, 0, 5]
        );
        assert!(gl_homology(&t_star(5), &ts).is_err());
    }

    #[test]
    fn tensor_tor_vanishes_for_different_arities() {
        let f = gf(3);
        let input = AdditiveTorMatrix::uniform(2, 1, g(4, &[1, 1]), TorSource::UserSupplied);
        let u = GroupRepresentation::trivial(YoungComposition::full(2), f);
        let v = GroupRepresentation::trivial(YoungComposition::full(1), f);
        let out = tensor_tor(&input, &u, &v, ProjectivityPolicy::default()).unwrap();
        assert!(out.space.is_zero());
        assert!(out.provenance.facts.contains(&Fact::TensorVanishing));
    }

    #[test]
    fn tensor_tor_examples() {
        let f = gf(3);
        let input = AdditiveTorMatrix::uniform(2, 2, GradedSpace::unit(4), TorSource::UserSupplied);
        let u = GroupRepresentation::trivial(YoungComposition::full(2), f);
        let out = tensor_tor(&input, &u, &u, ProjectivityPolicy::default()).unwrap();
        assert_eq!(out.space.dims(), &[1, 0, 0, 0, 0]);

        let b = g(5, &[2, 1, 0, 3]);
        let input = AdditiveTorMatrix::uniform(1, 1, b.clone(), TorSource::UserSupplied);
        let one = GroupRepresentation::trivial(YoungComposition::full(1), f);
        assert_eq!(tensor_tor(&input, &one, &one, ProjectivityPolicy::default()).unwrap().space, b);
    }

    #[test]
    fn tensor_tor_refuses_small_characteristic() {
        let f = gf(2);
        let input = AdditiveTorMatrix::uniform(2, 2, GradedSpace::unit(2), TorSource::UserSupplied);
        let u = GroupRepresentation::trivial(YoungComposition::full(2), f);
        let err = tensor_tor(&input, &u, &u, ProjectivityPolicy::default()).unwrap_err();
        assert!(matches!(err, CalcError::Sym(SymError::ProjectivityRefused { .. })));
        let out = tensor_tor(&input, &u, &u, ProjectivityPolicy { assume_projective: true }).unwrap();
        assert!(out.provenance.hypotheses.contains(&Hypothesis::ProjectivityAssumed));
    }

    #[test]
    fn mixed_blocks_tor() {
        // π^⊗ = π_1 ⊗ π_2, ρ^⊗ = ρ_1^{⊗2}: 𝔖_𝐝 trivial, 𝔖_𝐞 = 𝔖_2.
        let f = gf(5);
        let pi = YoungComposition::new(vec![1, 1]).unwrap();
        let rho = YoungComposition::full(2);
        let a = g(4, &[1, 0, 1]);
        let b = g(4, &[0, 1]);
        let input = AdditiveTorMatrix::new(
            pi.clone(),
            rho.clone(),
            vec![vec![a.clone()], vec![b.clone()]],
            vec![vec![TorSource::UserSupplied]; 2],
            4,
        )
        .unwrap();
        let u = GroupRepresentation::trivial(pi, f);
        let v = GroupRepresentation::trivial(rho, f);
        let out = tensor_tor(&input, &u, &v, ProjectivityPolicy::default()).unwrap();
        // 𝔖_2 on ρ-side swaps the two σ summands freely, so the quotient is
        // one copy of Tor(π_1,ρ_1) ⊗ Tor(π_2,ρ_1).
        assert_eq!(out.space, a.tensor(&b));
        let module = sigma_module(&input).unwrap();
        module.check_relations().unwrap();
    }

    #[test]
    fn upsilon_examples() {
        let b = g(4, &[2, 1, 1]);
        let m = upsilon_source_iterated(&b, 1).unwrap();
        assert_eq!(m.space().dims_only(), b);

        let m = upsilon_source_iterated(&GradedSpace::unit(2), 2).unwrap();
        assert_eq!(m.space().dims(), &[2, 0, 0]);

        let m = upsilon_source_iterated(&GradedSpace::point(3, 1), 2).unwrap();
        assert_eq!(m.space().dims(), &[0, 0, 2, 0]);
        // The 𝔖_𝐞 swap (second generator) carries the Koszul sign of two odd classes.
        let swap = &m.actions()[2][1];
        for j in 0..2 {
            assert_eq!(swap.target(j).1, Sign::Minus);
        }
        m.check_relations().unwrap();
        assert!(upsilon_source_iterated(&b, 7).is_err());
    }

    #[test]
    fn upsilon_matches_sigma_module() {
        let f = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=3 {
            for _ in 0..4 {
                let dims: Vec<usize> = (0..=5).map(|_| rng.gen_range(0..3)).collect();
                let b = g(5, &dims);
                let iter = upsilon_source_iterated(&b, d).unwrap();
                let generic = sigma_module(&AdditiveTorMatrix::uniform(d, d, b.clone(), TorSource::UserSupplied)).unwrap();
                let factorial: usize = (1..=d).product();
                let power = (0..d - 1).fold(b.clone(), |acc, _| acc.tensor(&b));
                assert_eq!(iter.space().dims_only(), power.scaled(factorial));
                assert_eq!(iter.space().dims_only(), generic.space().dims_only());
                iter.check_relations().unwrap();
                for rep in [
                    GroupRepresentation::trivial(YoungComposition::full(d), f),
                    GroupRepresentation::sign(YoungComposition::full(d), f),
                ] {
                    let uv = GroupRepresentation::trivial(YoungComposition::full(d), f).outer_tensor(&rep);
                    assert_eq!(
                        iter.coinvariants(&uv, ProjectivityPolicy::default()).unwrap(),
                        generic.coinvariants(&uv, ProjectivityPolicy::default()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn schur_examples() {
        let f = gf(5);
        let s2 = YoungComposition::full(2);
        let trivial = SchurDatum::new(GroupRepresentation::trivial(s2.clone(), f)).unwrap();
        let sign = SchurDatum::new(GroupRepresentation::sign(s2, f)).unwrap();
        let pol = ProjectivityPolicy::default();
        assert_eq!(schur_apply(&trivial, &GradedSpace::unit(2), pol).unwrap().space.dims(), &[1, 0, 0]);
        let odd = GradedSpace::point(2, 1);
        assert_eq!(schur_apply(&trivial, &odd, pol).unwrap().space.dim(2), 0);
        assert_eq!(schur_apply(&sign, &odd, pol).unwrap().space.dim(2), 1);
        // Exterior square of an even 2-dimensional space.
        assert_eq!(schur_apply(&sign, &g(0, &[2]), pol).unwrap().space.dims(), &[1]);
    }

    #[test]
    fn example_c_examples() {
        let f = gf(5);
        let pol = ProjectivityPolicy::default();
        let one = SchurDatum::new(GroupRepresentation::trivial(YoungComposition::full(1), f)).unwrap();
        let add = g(6, &[1, 2, 0, 1]);
        assert_eq!(example_c(&add, &one, pol).unwrap().space, apply_corollary(&add).space);

        let s2 = SchurDatum::new(GroupRepresentation::trivial(YoungComposition::full(2), f)).unwrap();
        // S² of T_*: multisets {a, b} of even degrees summing to n.
        let expected: Vec<usize> = (0..=8).map(|n| if n % 2 == 0 { n / 4 + 1 } else { 0 }).collect();
        assert_eq!(example_c(&GradedSpace::unit(8), &s2, pol).unwrap().space.dims(), expected.as_slice());
        assert!(example_c(&GradedSpace::zero(8), &s2, pol).unwrap().space.is_zero());
    }

    #[test]
    fn action_on_labels_is_a_right_action() {
        let pi = YoungComposition::new(vec![2, 1]).unwrap();
        let rho = YoungComposition::new(vec![1, 2]).unwrap();
        let taus = pi.enumerate().unwrap();
        let mus = rho.enumerate().unwrap();
        let label = SigmaLabel {
            sigma: Permutation::from_one_based(&[3, 1, 2]).unwrap(),
            factors: vec![(1, 0), (3, 1), (2, 0)],
        };
        for (t1, m1) in taus.iter().cartesian_product(&mus) {
            for (t2, m2) in taus.iter().cartesian_product(&mus) {
                let (once, s1) = act_on_label(&label, t1, m1);
                let (twice, s2) = act_on_label(&once, t2, m2);
                let (direct, s) = act_on_label(&label, &t1.compose(t2), &m1.compose(m2));
                assert_eq!(twice, direct);
                assert_eq!(s1 * s2, s);
            }
        }
    }
}
