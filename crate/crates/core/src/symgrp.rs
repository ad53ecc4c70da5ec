//! Permutations, Young subgroups, Koszul signs, representations of symmetric
//! groups over `GF(p)` given by Coxeter generators, and degreewise
//! (co)invariants of group actions on graded spaces.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::gf_linalg::{Matrix, PrimeField};
use crate::graded::GradedSpace;

/// Largest `d` for which whole groups are enumerated.
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("Young composition parts must be positive, got {0:?}")]
    InvalidComposition(Vec<usize>),
    #[error("enumeration of a group on {0} letters exceeds the limit of {ENUMERATION_LIMIT}")]
    EnumerationLimit(usize),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error(
        "group of order {order} is divisible by p = {p}; projectivity of the coefficient module \
         cannot be verified (set assume_projective to proceed)"
    )]
    ProjectivityRefused { order: u128, p: u32 },
}

/// A bijection of `{0, …, d-1}`, displayed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|i| i + 1).join(" "))
    }
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self, SymError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(SymError::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as written in the usual one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self, SymError> {
        if images.contains(&0) {
            return Err(SymError::InvalidPermutation(images.to_vec()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    /// The adjacent transposition exchanging `i` and `i + 1` (0-based).
    pub fn adjacent(d: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Pairs `i < j` with `self(i) > self(j)`.
    pub fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let d = self.images.len();
        (0..d)
            .flat_map(move |i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
    }

    /// Positions `i_1, …, i_k` with `self = s_{i_1} ∘ ⋯ ∘ s_{i_k}` where `s_i`
    /// is the adjacent transposition at `i`. Reduced (length = inversion count).
    pub fn coxeter_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut right = Vec::new();
        // w ∘ s_{a1} ∘ … ∘ s_{ak} = id, so self = s_{ak} ∘ … ∘ s_{a1}.
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            right.push(i);
        }
        right.reverse();
        right
    }
}

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn residue(self, field: PrimeField) -> u32 {
        field.reduce(self.as_i64())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        Sign::from_odd((self == Sign::Minus) != (other == Sign::Minus))
    }
}

/// The Koszul sign `ε` with `x_1 ⋯ x_d = ε · x_{μ(1)} ⋯ x_{μ(d)}` in the free
/// graded-commutative algebra, where `degrees[i]` is the degree of `x_{i+1}`.
///
/// Computed as the product over inversion pairs `i < j`, `μ(i) > μ(j)`, of
/// `(-1)^{deg x_{μ(i)} · deg x_{μ(j)}}`.
pub fn koszul_sign(mu: &Permutation, degrees: &[usize]) -> Sign {
    assert_eq!(mu.degree(), degrees.len(), "degree vector length mismatch");
    let odd = mu
        .inversions()
        .filter(|&(i, j)| degrees[mu.apply(i)] % 2 == 1 && degrees[mu.apply(j)] % 2 == 1)
        .count();
    Sign::from_odd(odd % 2 == 1)
}

/// Block sizes `(d_1, …, d_n)` of a Young subgroup `𝔖_{d_1} × ⋯ × 𝔖_{d_n} ⊂ 𝔖_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungComposition {
    parts: Vec<usize>,
}

impl fmt::Display for YoungComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl YoungComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) {
            return Err(SymError::InvalidComposition(parts));
        }
        Ok(YoungComposition { parts })
    }

    /// The full symmetric group `𝔖_d` (a single block).
    pub fn full(d: usize) -> Self {
        YoungComposition {
            parts: if d == 0 { Vec::new() } else { vec![d] },
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Π d_i!`.
    pub fn order(&self) -> u128 {
        self.parts
            .iter()
            .map(|&d| (1..=d as u128).product::<u128>())
            .product()
    }

    /// Index of the block containing position `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (b, &d) in self.parts.iter().enumerate() {
            acc += d;
            if i < acc {
                return b;
            }
        }
        panic!("position {i} outside composition {self}");
    }

    /// Positions `i` such that `i` and `i + 1` lie in the same block; the
    /// adjacent transpositions there generate the Young subgroup.
    pub fn coxeter_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut start = 0;
        for &d in &self.parts {
            out.extend(start..start + d - 1);
            start += d;
        }
        out
    }

    /// Product group: blocks of `self` followed by blocks of `other`.
    pub fn concat(&self, other: &YoungComposition) -> YoungComposition {
        YoungComposition {
            parts: self.parts.iter().chain(&other.parts).copied().collect(),
        }
    }

    /// Maschke criterion: the order is prime to `p` iff every block is shorter than `p`.
    pub fn order_coprime_to(&self, p: u32) -> bool {
        self.parts.iter().all(|&d| d < p as usize)
    }

    /// All block permutations, blocks varying lexicographically, first block slowest.
    pub fn enumerate(&self) -> Result<Vec<Permutation>, SymError> {
        let d = self.total();
        if d > ENUMERATION_LIMIT {
            return Err(SymError::EnumerationLimit(d));
        }
        let mut start = 0;
        let mut per_block = Vec::new();
        for &len in &self.parts {
            let block: Vec<usize> = (start..start + len).collect();
            per_block.push(block.iter().copied().permutations(len).collect::<Vec<_>>());
            start += len;
        }
        Ok(per_block
            .into_iter()
            .multi_cartesian_product()
            .map(|pieces| Permutation {
                images: pieces.into_iter().flatten().collect(),
            })
            .collect())
    }
}

/// Left representation of a Young subgroup over `GF(p)`, specified by one
/// matrix per Coxeter generator (in the order of
/// [`YoungComposition::coxeter_generators`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRepresentation {
    group: YoungComposition,
    field: PrimeField,
    dim: usize,
    generators: Vec<Matrix>,
}

impl GroupRepresentation {
    /// Validates `s_i² = 1`, the braid relations inside blocks, and
    /// commutation of non-adjacent generators.
    pub fn new(
        group: YoungComposition,
        field: PrimeField,
        dim: usize,
        generators: Vec<Matrix>,
    ) -> Result<Self, SymError> {
        let positions = group.coxeter_generators();
        if positions.len() != generators.len() {
            return Err(SymError::InvalidRepresentation(format!(
                "group {group} has {} Coxeter generators, {} matrices given",
                positions.len(),
                generators.len()
            )));
        }
        for (k, m) in generators.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim || m.field() != field {
                return Err(SymError::InvalidRepresentation(format!(
                    "generator {k} is not a {dim}x{dim} matrix over {field}"
                )));
            }
            if !m.mul(m).is_identity() {
                return Err(SymError::InvalidRepresentation(format!(
                    "generator {k} does not square to the identity"
                )));
            }
        }
        for a in 0..generators.len() {
            for b in a + 1..generators.len() {
                let (ga, gb) = (&generators[a], &generators[b]);
                let ok = if positions[b] == positions[a] + 1 {
                    ga.mul(gb).mul(ga) == gb.mul(ga).mul(gb)
                } else {
                    ga.mul(gb) == gb.mul(ga)
                };
                if !ok {
                    return Err(SymError::InvalidRepresentation(format!(
                        "generators at positions {} and {} violate the Coxeter relations",
                        positions[a], positions[b]
                    )));
                }
            }
        }
        Ok(GroupRepresentation {
            group,
            field,
            dim,
            generators,
        })
    }

    pub fn trivial(group: YoungComposition, field: PrimeField) -> Self {
        let n = group.coxeter_generators().len();
        GroupRepresentation {
            group,
            field,
            dim: 1,
            generators: vec![Matrix::identity(field, 1); n],
        }
    }

    pub fn sign(group: YoungComposition, field: PrimeField) -> Self {
        let n = group.coxeter_generators().len();
        let minus = Matrix::identity(field, 1).scale(field.reduce(-1));
        GroupRepresentation {
            group,
            field,
            dim: 1,
            generators: vec![minus; n],
        }
    }

    /// The `(d-1)`-dimensional standard representation of `𝔖_d`: the sum-zero
    /// subspace of the permutation module, in the basis `f_i = v_i - v_{i+1}`.
    pub fn standard(d: usize, field: PrimeField) -> Result<Self, SymError> {
        if d < 2 {
            return Err(SymError::InvalidRepresentation(format!(
                "standard representation needs d >= 2, got {d}"
            )));
        }
        let dim = d - 1;
        let mut gens = Vec::with_capacity(d - 1);
        for s in 0..d - 1 {
            // s swaps v_s and v_{s+1}: f_s ↦ -f_s, f_{s-1} ↦ f_{s-1} + f_s,
            // f_{s+1} ↦ f_s + f_{s+1}, other f_i fixed.
            let mut m = Matrix::identity(field, dim);
            m.set(s, s, field.reduce(-1));
            if s >= 1 {
                m.set(s, s - 1, 1);
            }
            if s + 1 < dim {
                m.set(s, s + 1, 1);
            }
            gens.push(m);
        }
        Self::new(YoungComposition::full(d), field, dim, gens)
    }

    /// The regular representation `k[𝔖_d]` with left multiplication, basis in
    /// the enumeration order of the group.
    pub fn regular(group: YoungComposition, field: PrimeField) -> Result<Self, SymError> {
        let elements = group.enumerate()?;
        let index = |g: &Permutation| elements.iter().position(|x| x == g).expect("closed");
        let d = group.total();
        let gens = group
            .coxeter_generators()
            .into_iter()
            .map(|pos| {
                let s = Permutation::adjacent(d, pos);
                let mut m = Matrix::zeros(field, elements.len(), elements.len());
                for (j, g) in elements.iter().enumerate() {
                    m.set(index(&s.compose(g)), j, 1);
                }
                m
            })
            .collect();
        Self::new(group.clone(), field, elements.len(), gens)
    }

    /// Outer tensor product `U ⊗ V`, a representation of the product group
    /// `group(U) × group(V)` presented as the concatenated composition.
    pub fn outer_tensor(&self, other: &GroupRepresentation) -> GroupRepresentation {
        assert_eq!(self.field, other.field);
        let f = self.field;
        let id_u = Matrix::identity(f, self.dim);
        let id_v = Matrix::identity(f, other.dim);
        let generators = self
            .generators
            .iter()
            .map(|g| g.kronecker(&id_v))
            .chain(other.generators.iter().map(|g| id_u.kronecker(g)))
            .collect();
        GroupRepresentation {
            group: self.group.concat(&other.group),
            field: f,
            dim: self.dim * other.dim,
            generators,
        }
    }

    pub fn group(&self) -> &YoungComposition {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Matrix of an arbitrary group element.
    pub fn matrix_of(&self, g: &Permutation) -> Result<Matrix, SymError> {
        let positions = self.group.coxeter_generators();
        let mut m = Matrix::identity(self.field, self.dim);
        for pos in g.coxeter_word() {
            let k = positions.iter().position(|&x| x == pos).ok_or_else(|| {
                SymError::InvalidAction(format!("{g} is not in the Young subgroup {}", self.group))
            })?;
            m = m.mul(&self.generators[k]);
        }
        Ok(m)
    }
}

/// A square linear map presented by its columns; the interface the
/// coinvariant routines consume.
pub trait LinearAction {
    fn dim(&self) -> usize;
    /// Nonzero entries `(row, value)` of column `j`, values reduced in `field`.
    fn column_entries(&self, j: usize, field: PrimeField) -> Vec<(usize, u32)>;
}

impl LinearAction for Matrix {
    fn dim(&self) -> usize {
        assert!(self.is_square());
        self.rows()
    }

    fn column_entries(&self, j: usize, _field: PrimeField) -> Vec<(usize, u32)> {
        (0..self.rows())
            .filter_map(|i| {
                let v = self.get(i, j);
                (v != 0).then_some((i, v))
            })
            .collect()
    }
}

/// Monomial matrix sending basis vector `j` to `sign_j · e_{target_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    targets: Vec<usize>,
    signs: Vec<Sign>,
}

impl SignedPermutation {
    pub fn new(targets: Vec<usize>, signs: Vec<Sign>) -> Result<Self, SymError> {
        if targets.len() != signs.len() {
            return Err(SymError::InvalidAction("target/sign length mismatch".into()));
        }
        Permutation::new(targets.clone())
            .map_err(|_| SymError::InvalidAction("targets are not a bijection".into()))?;
        Ok(SignedPermutation { targets, signs })
    }

    pub fn target(&self, j: usize) -> (usize, Sign) {
        (self.targets[j], self.signs[j])
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// `self ∘ other` as linear maps.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let targets = other.targets.iter().map(|&t| self.targets[t]).collect();
        let signs = other
            .targets
            .iter()
            .zip(&other.signs)
            .map(|(&t, &s)| self.signs[t] * s)
            .collect();
        SignedPermutation { targets, signs }
    }

    pub fn to_matrix(&self, field: PrimeField) -> Matrix {
        let mut m = Matrix::zeros(field, self.len(), self.len());
        for (j, (&t, &s)) in self.targets.iter().zip(&self.signs).enumerate() {
            m.set(t, j, s.residue(field));
        }
        m
    }
}

impl LinearAction for SignedPermutation {
    fn dim(&self) -> usize {
        self.targets.len()
    }

    fn column_entries(&self, j: usize, field: PrimeField) -> Vec<(usize, u32)> {
        vec![(self.targets[j], self.signs[j].residue(field))]
    }
}

/// Projectivity hypothesis for the coefficient module of a coinvariant computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ProjectivityPolicy {
    /// Skip the Maschke check and take projectivity as given.
    pub assume_projective: bool,
}

/// How the projectivity hypothesis was discharged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectivityBasis {
    /// Group order prime to `p`.
    Maschke,
    /// Asserted by the caller, unchecked.
    Assumed,
}

impl ProjectivityPolicy {
    pub fn check(self, group: &YoungComposition, p: u32) -> Result<ProjectivityBasis, SymError> {
        if group.order_coprime_to(p) {
            Ok(ProjectivityBasis::Maschke)
        } else if self.assume_projective {
            Ok(ProjectivityBasis::Assumed)
        } else {
            Err(SymError::ProjectivityRefused {
                order: group.order(),
                p,
            })
        }
    }
}

/// Per-component relation blocks `T_g - I` where `T_g = A_g ⊗ R_g` acts on
/// `X ⊗ W`. The action preserves the span of each connected component of its
/// nonzero pattern, so the relation matrix is block diagonal over components.
fn relation_blocks<A: LinearAction>(actions: &[A], rep: &GroupRepresentation) -> Vec<Vec<Matrix>> {
    let field = rep.field();
    let n = actions.first().map_or(0, LinearAction::dim);
    // Union-find over the basis of X.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let columns: Vec<Vec<Vec<(usize, u32)>>> = actions
        .iter()
        .map(|a| (0..n).map(|j| a.column_entries(j, field)).collect())
        .collect();
    for cols in &columns {
        for (j, col) in cols.iter().enumerate() {
            for &(i, _) in col {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut comp_of_root = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if comp_of_root[r] == usize::MAX {
            comp_of_root[r] = components.len();
            components.push(Vec::new());
        }
        components[comp_of_root[r]].push(x);
    }

    let w = rep.dim();
    let mut local = vec![0usize; n];
    components
        .iter()
        .map(|comp| {
            for (k, &x) in comp.iter().enumerate() {
                local[x] = k;
            }
            let size = comp.len() * w;
            columns
                .iter()
                .zip(rep.generators())
                .map(|(cols, r)| {
                    let mut m = Matrix::zeros(field, size, size);
                    for &x in comp {
                        for &(i, a) in &cols[x] {
                            for wc in 0..w {
                                for wr in 0..w {
                                    let b = r.get(wr, wc);
                                    if b != 0 {
                                        let (row, col) = (local[i] * w + wr, local[x] * w + wc);
                                        let cur = m.get(row, col);
                                        m.set(row, col, field.add(cur, field.mul(a, b)));
                                    }
                                }
                            }
                        }
                        for wc in 0..w {
                            let d = local[x] * w + wc;
                            let cur = m.get(d, d);
                            m.set(d, d, field.sub(cur, 1));
                        }
                    }
                    m
                })
                .collect()
        })
        .collect()
}

fn check_actions<A: LinearAction>(
    actions: &[A],
    rep: &GroupRepresentation,
    expected_dim: usize,
) -> Result<(), SymError> {
    if actions.len() != rep.generators().len() {
        return Err(SymError::InvalidAction(format!(
            "{} generator actions given, representation has {} generators",
            actions.len(),
            rep.generators().len()
        )));
    }
    if let Some(bad) = actions.iter().find(|a| a.dim() != expected_dim) {
        return Err(SymError::InvalidAction(format!(
            "action of dimension {} on a space of dimension {expected_dim}",
            bad.dim()
        )));
    }
    Ok(())
}

/// Dimension of `X ⊗_G W` for a right action on `X` given by generator maps
/// and a left representation `W`: `dim X · dim W` minus the rank of the
/// stacked relation maps `A_g ⊗ R_g − I`.
pub fn coinvariant_dim<A: LinearAction>(
    actions: &[A],
    space_dim: usize,
    rep: &GroupRepresentation,
) -> Result<usize, SymError> {
    check_actions(actions, rep, space_dim)?;
    if actions.is_empty() {
        return Ok(space_dim * rep.dim());
    }
    let field = rep.field();
    Ok(relation_blocks(actions, rep)
        .iter()
        .map(|blocks| {
            let size = blocks[0].rows();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            size - Matrix::hstack(field, size, &refs).rank()
        })
        .sum())
}

/// Dimension of the invariants of the same combined action (common kernel of
/// the relation maps).
pub fn invariant_dim<A: LinearAction>(
    actions: &[A],
    space_dim: usize,
    rep: &GroupRepresentation,
) -> Result<usize, SymError> {
    check_actions(actions, rep, space_dim)?;
    if actions.is_empty() {
        return Ok(space_dim * rep.dim());
    }
    let field = rep.field();
    Ok(relation_blocks(actions, rep)
        .iter()
        .map(|blocks| {
            let size = blocks[0].rows();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            size - Matrix::vstack(field, size, &refs).rank()
        })
        .sum())
}

/// Degreewise coinvariants `space ⊗_G rep`; `actions[n]` holds one map per
/// Coxeter generator of `rep.group()` for degree `n`.
pub fn coinvariants<A: LinearAction>(
    space: &GradedSpace,
    actions: &[Vec<A>],
    rep: &GroupRepresentation,
    policy: ProjectivityPolicy,
) -> Result<GradedSpace, SymError> {
    policy.check(rep.group(), rep.field().p())?;
    degreewise(space, actions, rep, coinvariant_dim)
}

/// Degreewise invariants of the combined action, same input conventions.
pub fn invariants<A: LinearAction>(
    space: &GradedSpace,
    actions: &[Vec<A>],
    rep: &GroupRepresentation,
) -> Result<GradedSpace, SymError> {
    degreewise(space, actions, rep, invariant_dim)
}

fn degreewise<A: LinearAction>(
    space: &GradedSpace,
    actions: &[Vec<A>],
    rep: &GroupRepresentation,
    f: fn(&[A], usize, &GroupRepresentation) -> Result<usize, SymError>,
) -> Result<GradedSpace, SymError> {
    let d = space.truncation();
    if actions.len() != d + 1 {
        return Err(SymError::InvalidAction(format!(
            "{} degrees of action data for truncation {d}",
            actions.len()
        )));
    }
    let dims = (0..=d)
        .map(|n| f(&actions[n], space.dim(n), rep))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedSpace::from_dims(d, &dims))
}
