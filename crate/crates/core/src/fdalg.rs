//! Finite-dimensional associative algebras over `GF(p)` given by structure
//! constants, their modules, free resolutions, and Tor / Ext / Hochschild
//! homology up to a truncation degree.
//!
//! Free modules `A^r` use coordinates `i * dim(A) + s` for the basis element
//! `g_i · b_s`. A differential `d_k : A^{r_k} → A^{r_{k-1}}` is stored as the
//! matrix whose column `j` is `d_k(g_j)`, i.e. a column of `r_{k-1}` algebra
//! elements.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf_linalg::{LinalgError, Matrix, PrimeField, Subspace};
use crate::graded::GradedSpace;

/// Guard on `dim(A)^2` for Hochschild computations.
pub const MAX_ENVELOPING_DIM: usize = 64;
/// Guard on the `GF(p)`-dimension of a single free module in a resolution.
pub const MAX_FREE_DIM: usize = 6000;
/// Guard on `p^{dim}` when the radical has to be found by enumeration.
pub const MAX_RADICAL_ENUMERATION: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("resolution failed exactness check at stage {0}")]
    NotExact(usize),
    #[error("unknown algebra preset `{0}`")]
    UnknownPreset(String),
}

/// Associative unital algebra with basis `b_0, …, b_{n-1}` and
/// `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FDAlgebra {
    field: PrimeField,
    dim: usize,
    structure: Vec<u32>,
    unit: Vec<u32>,
    augmentation: Option<Vec<u32>>,
}

impl fmt::Debug for FDAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDAlgebra(dim {} over {})", self.dim, self.field)
    }
}

impl FDAlgebra {
    /// Structure constants as a dense cube in `[i][j][k]` order; all entries
    /// reduced mod `p`. Associativity and unit laws are checked exhaustively.
    pub fn new(
        field: PrimeField,
        dim: usize,
        structure: &[i64],
        unit: &[i64],
    ) -> Result<Self, AlgebraError> {
        if structure.len() != dim * dim * dim {
            return Err(AlgebraError::InvalidAlgebra(format!(
                "{} structure constants for dimension {dim} (expected {})",
                structure.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(AlgebraError::InvalidAlgebra(format!(
                "unit vector has length {}, expected {dim}",
                unit.len()
            )));
        }
        let alg = FDAlgebra {
            field,
            dim,
            structure: structure.iter().map(|&x| field.reduce(x)).collect(),
            unit: unit.iter().map(|&x| field.reduce(x)).collect(),
            augmentation: None,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        if n == 0 {
            return Err(AlgebraError::InvalidAlgebra("zero-dimensional algebra".into()));
        }
        for i in 0..n {
            let bi = self.basis_vector(i);
            if self.multiply(&self.unit, &bi) != bi || self.multiply(&bi, &self.unit) != bi {
                return Err(AlgebraError::InvalidAlgebra(format!(
                    "unit law fails on basis element {i}"
                )));
            }
        }
        let right: Vec<Matrix> = (0..n).map(|k| self.right_mult(&self.basis_vector(k))).collect();
        for i in 0..n {
            for j in 0..n {
                let bij = self.product_of_basis(i, j);
                let bi = self.basis_vector(i);
                for (k, rk) in right.iter().enumerate() {
                    let lhs = rk.mul_vec(&bij);
                    let rhs = self.multiply(&bi, &self.product_of_basis(j, k));
                    if lhs != rhs {
                        return Err(AlgebraError::InvalidAlgebra(format!(
                            "associativity fails on basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    fn product_of_basis(&self, i: usize, j: usize) -> Vec<u32> {
        let start = (i * self.dim + j) * self.dim;
        self.structure[start..start + self.dim].to_vec()
    }

    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0u32; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                let start = (i * n + j) * n;
                for (o, &s) in out.iter_mut().zip(&self.structure[start..start + n]) {
                    if s != 0 {
                        *o = f.add(*o, f.mul(c, s));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|s| self.multiply(a, &self.basis_vector(s)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|s| self.multiply(&self.basis_vector(s), a))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// A ring map to `GF(p)` attached by the presets, if any.
    pub fn augmentation(&self) -> Option<&[u32]> {
        self.augmentation.as_deref()
    }

    /// Attaches an augmentation character, checking `χ(1) = 1` and
    /// `χ(b_i b_j) = χ(b_i) χ(b_j)`.
    pub fn augmented(self, chi: &[i64]) -> Result<Self, AlgebraError> {
        let f = self.field;
        if chi.len() != self.dim {
            return Err(AlgebraError::InvalidAlgebra(format!(
                "augmentation of length {} for an algebra of dimension {}",
                chi.len(),
                self.dim
            )));
        }
        let chi: Vec<u32> = chi.iter().map(|&c| f.reduce(c)).collect();
        let eval = |v: &[u32]| v.iter().zip(&chi).fold(0, |acc, (&x, &c)| f.add(acc, f.mul(x, c)));
        if eval(&self.unit) != 1 {
            return Err(AlgebraError::InvalidAlgebra("augmentation does not send 1 to 1".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                if eval(&self.product_of_basis(i, j)) != f.mul(chi[i], chi[j]) {
                    return Err(AlgebraError::InvalidAlgebra(format!(
                        "augmentation is not multiplicative on b_{i} b_{j}"
                    )));
                }
            }
        }
        Ok(self.with_augmentation(chi))
    }

    fn with_augmentation(mut self, chi: Vec<u32>) -> Self {
        self.augmentation = Some(chi);
        self
    }

    /// The opposite algebra `A^op` (same basis, reversed product).
    pub fn opposite(&self) -> FDAlgebra {
        let n = self.dim;
        let mut structure = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[(i * n + j) * n + k] = self.constant(j, i, k);
                }
            }
        }
        FDAlgebra {
            field: self.field,
            dim: n,
            structure,
            unit: self.unit.clone(),
            augmentation: self.augmentation.clone(),
        }
    }

    /// `A ⊗ B` with basis `b_i ⊗ b'_j` at index `i * dim(B) + j`.
    pub fn tensor(&self, other: &FDAlgebra) -> FDAlgebra {
        assert_eq!(self.field, other.field);
        let f = self.field;
        let (n, m) = (self.dim, other.dim);
        let nm = n * m;
        let mut structure = vec![0u32; nm * nm * nm];
        for i in 0..n {
            for k in 0..n {
                for s in 0..n {
                    let a = self.constant(i, k, s);
                    if a == 0 {
                        continue;
                    }
                    for j in 0..m {
                        for l in 0..m {
                            for t in 0..m {
                                let b = other.constant(j, l, t);
                                if b != 0 {
                                    let idx = ((i * m + j) * nm + (k * m + l)) * nm + (s * m + t);
                                    structure[idx] = f.mul(a, b);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u32; nm];
        for i in 0..n {
            for j in 0..m {
                unit[i * m + j] = f.mul(self.unit[i], other.unit[j]);
            }
        }
        let augmentation = match (&self.augmentation, &other.augmentation) {
            (Some(a), Some(b)) => Some(
                (0..nm)
                    .map(|x| f.mul(a[x / m], b[x % m]))
                    .collect(),
            ),
            _ => None,
        };
        FDAlgebra {
            field: f,
            dim: nm,
            structure,
            unit,
            augmentation,
        }
    }

    /// `A^e = A ⊗ A^op`.
    pub fn enveloping(&self) -> FDAlgebra {
        self.tensor(&self.opposite())
    }

    /// Trace-form radical `{a : tr(L_{x a}) = 0 for all x}`, a two-sided ideal
    /// containing the Jacobson radical.
    fn trace_radical(&self) -> Vec<Vec<u32>> {
        let n = self.dim;
        let f = self.field;
        let traces: Vec<u32> = (0..n)
            .map(|k| {
                let l = self.left_mult(&self.basis_vector(k));
                (0..n).fold(0, |acc, i| f.add(acc, l.get(i, i)))
            })
            .collect();
        let form = Matrix::from_fn(f, n, n, |x, y| {
            self.product_of_basis(x, y)
                .iter()
                .zip(&traces)
                .fold(0, |acc, (&c, &t)| f.add(acc, f.mul(c, t)))
        });
        let k = form.nullspace_basis();
        (0..k.cols()).map(|j| k.column(j)).collect()
    }

    /// Whether the subalgebra spanned by the independent vectors `span`
    /// (assumed closed under multiplication) is nilpotent.
    fn is_nilpotent_span(&self, span: &[Vec<u32>]) -> bool {
        let mut power = span.to_vec();
        loop {
            let mut next = Subspace::new(self.field, self.dim);
            for x in &power {
                for y in span {
                    next.insert(&self.multiply(x, y));
                }
            }
            if next.dim() == 0 {
                return true;
            }
            // Powers of a subalgebra form a decreasing chain; stalling means not nilpotent.
            if next.dim() >= power.len() {
                return false;
            }
            power = next.basis().to_vec();
        }
    }

    /// Basis of the Jacobson radical.
    ///
    /// The trace-form radical contains it; when that ideal is already
    /// nilpotent it is the radical. Otherwise the radical is collected from
    /// elements `a` of the trace-form radical whose left ideal `A a` is
    /// nilpotent, by enumeration.
    pub fn radical(&self) -> Result<Vec<Vec<u32>>, AlgebraError> {
        let candidate = self.trace_radical();
        if candidate.is_empty() || self.is_nilpotent_span(&candidate) {
            return Ok(candidate);
        }
        let p = self.field.p() as u64;
        let count = p
            .checked_pow(candidate.len() as u32)
            .filter(|&c| c <= MAX_RADICAL_ENUMERATION)
            .ok_or_else(|| {
                AlgebraError::SizeGuard(format!(
                    "radical search over {}^{} elements",
                    p,
                    candidate.len()
                ))
            })?;
        let f = self.field;
        let mut radical = Subspace::new(f, self.dim);
        let mut coeffs = vec![0u32; candidate.len()];
        for _ in 1..count {
            // Next coefficient vector in base p.
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c == f.p() {
                    *c = 0;
                } else {
                    break;
                }
            }
            let mut a = vec![0u32; self.dim];
            for (c, v) in coeffs.iter().zip(&candidate) {
                for (x, &y) in a.iter_mut().zip(v) {
                    *x = f.add(*x, f.mul(*c, y));
                }
            }
            if radical.contains(&a) {
                continue;
            }
            let mut ideal = Subspace::new(f, self.dim);
            for t in 0..self.dim {
                ideal.insert(&self.multiply(&self.basis_vector(t), &a));
            }
            if self.is_nilpotent_span(&span_basis(&ideal)) {
                radical.insert(&a);
            }
        }
        Ok(span_basis(&radical))
    }

    pub fn is_semisimple(&self) -> Result<bool, AlgebraError> {
        Ok(self.radical()?.is_empty())
    }

    // Presets.

    /// `GF(p)` itself.
    pub fn field_algebra(field: PrimeField) -> Self {
        FDAlgebra {
            field,
            dim: 1,
            structure: vec![1],
            unit: vec![1],
            augmentation: Some(vec![1]),
        }
    }

    /// `GF(p)[t]/t^n` with basis `1, t, …, t^{n-1}`, augmented by `t ↦ 0`.
    pub fn truncated_poly(field: PrimeField, n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::InvalidAlgebra("k[t]/t^0 is zero".into()));
        }
        let mut structure = vec![0i64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    structure[(i * n + j) * n + i + j] = 1;
                }
            }
        }
        let mut unit = vec![0i64; n];
        unit[0] = 1;
        let mut chi = vec![0u32; n];
        chi[0] = 1;
        Ok(Self::new(field, n, &structure, &unit)?.with_augmentation(chi))
    }

    /// Dual numbers `GF(p)[t]/t²`.
    pub fn dual_numbers(field: PrimeField) -> Self {
        Self::truncated_poly(field, 2).expect("valid preset")
    }

    /// Group algebra of the cyclic group of order `m`, basis `g^0, …, g^{m-1}`,
    /// augmented by `g ↦ 1`.
    pub fn group_algebra_cyclic(field: PrimeField, m: usize) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidAlgebra("cyclic group of order 0".into()));
        }
        let mut structure = vec![0i64; m * m * m];
        for i in 0..m {
            for j in 0..m {
                structure[(i * m + j) * m + (i + j) % m] = 1;
            }
        }
        let mut unit = vec![0i64; m];
        unit[0] = 1;
        Ok(Self::new(field, m, &structure, &unit)?.with_augmentation(vec![1; m]))
    }

    /// `GF(p)^m` with orthogonal idempotent basis, augmented by projection to
    /// the first factor.
    pub fn product_fields(field: PrimeField, m: usize) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidAlgebra("empty product".into()));
        }
        let mut structure = vec![0i64; m * m * m];
        for i in 0..m {
            structure[(i * m + i) * m + i] = 1;
        }
        let mut chi = vec![0u32; m];
        chi[0] = 1;
        Ok(Self::new(field, m, &structure, &vec![1; m])?.with_augmentation(chi))
    }

    /// `GF(4)` as a 2-dimensional `GF(2)`-algebra: basis `1, ω` with `ω² = ω + 1`.
    pub fn gf4_over_gf2() -> Self {
        let f = PrimeField::new(2).expect("2 is prime");
        // b0 = 1, b1 = ω.
        let structure = [
            1, 0, // 1·1
            0, 1, // 1·ω
            0, 1, // ω·1
            1, 1, // ω·ω
        ];
        Self::new(f, 2, &structure, &[1, 0]).expect("valid preset")
    }

    /// Upper triangular 2×2 matrices, basis `e11, e12, e22`, augmented by the
    /// `(1,1)` entry. The smallest non-commutative preset.
    pub fn upper_triangular(field: PrimeField) -> Self {
        let mut structure = [0i64; 27];
        let mut set = |i: usize, j: usize, k: usize| structure[(i * 3 + j) * 3 + k] = 1;
        set(0, 0, 0); // e11 e11 = e11
        set(0, 1, 1); // e11 e12 = e12
        set(1, 2, 1); // e12 e22 = e12
        set(2, 2, 2); // e22 e22 = e22
        Self::new(field, 3, &structure, &[1, 0, 1])
            .expect("valid preset")
            .with_augmentation(vec![1, 0, 0])
    }
}

fn span_basis(s: &Subspace) -> Vec<Vec<u32>> {
    s.basis().to_vec()
}

/// Named algebra presets usable from job files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraPreset {
    Field(u64),
    DualNumbers(u64),
    TruncatedPoly(u64, usize),
    GroupAlgebraCyclic(u64, usize),
    ProductFields(u64, usize),
    Gf4OverGf2,
    UpperTriangular(u64),
}

impl AlgebraPreset {
    pub const NAMES: [&'static str; 7] = [
        "field(p)",
        "dual_numbers(p)",
        "truncated_poly(p, n)",
        "group_algebra_cyclic(p, m)",
        "product_fields(p, m)",
        "gf4_over_gf2",
        "upper_triangular(p)",
    ];

    pub fn build(self) -> Result<FDAlgebra, AlgebraError> {
        let gf = |p: u64| PrimeField::new(p).map_err(AlgebraError::from);
        match self {
            AlgebraPreset::Field(p) => Ok(FDAlgebra::field_algebra(gf(p)?)),
            AlgebraPreset::DualNumbers(p) => Ok(FDAlgebra::dual_numbers(gf(p)?)),
            AlgebraPreset::TruncatedPoly(p, n) => FDAlgebra::truncated_poly(gf(p)?, n),
            AlgebraPreset::GroupAlgebraCyclic(p, m) => FDAlgebra::group_algebra_cyclic(gf(p)?, m),
            AlgebraPreset::ProductFields(p, m) => FDAlgebra::product_fields(gf(p)?, m),
            AlgebraPreset::Gf4OverGf2 => Ok(FDAlgebra::gf4_over_gf2()),
            AlgebraPreset::UpperTriangular(p) => Ok(FDAlgebra::upper_triangular(gf(p)?)),
        }
    }

    /// Characteristic of the base field.
    pub fn p(self) -> u64 {
        match self {
            AlgebraPreset::Field(p)
            | AlgebraPreset::DualNumbers(p)
            | AlgebraPreset::TruncatedPoly(p, _)
            | AlgebraPreset::GroupAlgebraCyclic(p, _)
            | AlgebraPreset::ProductFields(p, _)
            | AlgebraPreset::UpperTriangular(p) => p,
            AlgebraPreset::Gf4OverGf2 => 2,
        }
    }
}

impl fmt::Display for AlgebraPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraPreset::Field(p) => write!(f, "field({p})"),
            AlgebraPreset::DualNumbers(p) => write!(f, "dual_numbers({p})"),
            AlgebraPreset::TruncatedPoly(p, n) => write!(f, "truncated_poly({p}, {n})"),
            AlgebraPreset::GroupAlgebraCyclic(p, m) => write!(f, "group_algebra_cyclic({p}, {m})"),
            AlgebraPreset::ProductFields(p, m) => write!(f, "product_fields({p}, {m})"),
            AlgebraPreset::Gf4OverGf2 => f.write_str("gf4_over_gf2"),
            AlgebraPreset::UpperTriangular(p) => write!(f, "upper_triangular({p})"),
        }
    }
}

impl FromStr for AlgebraPreset {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "gf4_over_gf2" {
            return Ok(AlgebraPreset::Gf4OverGf2);
        }
        let bad = || AlgebraError::UnknownPreset(s.to_string());
        let (name, rest) = compact.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<u64> = args
            .split(',')
            .map(|a| a.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (name, nums.as_slice()) {
            ("field", [p]) => Ok(AlgebraPreset::Field(*p)),
            ("dual_numbers", [p]) => Ok(AlgebraPreset::DualNumbers(*p)),
            ("upper_triangular", [p]) => Ok(AlgebraPreset::UpperTriangular(*p)),
            ("truncated_poly", [p, n]) => Ok(AlgebraPreset::TruncatedPoly(*p, *n as usize)),
            ("group_algebra_cyclic", [p, m]) => {
                Ok(AlgebraPreset::GroupAlgebraCyclic(*p, *m as usize))
            }
            ("product_fields", [p, m]) => Ok(AlgebraPreset::ProductFields(*p, *m as usize)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A module given by one action matrix per algebra basis element.
///
/// Left modules: `b · v = action[b] v`. Right modules: `v · b = action[b] v`
/// (column-vector convention in both cases).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDModule {
    side: Side,
    field: PrimeField,
    dim: usize,
    action: Vec<Matrix>,
}

impl FDModule {
    /// Validates shapes, the unit law, and compatibility with the structure
    /// constants.
    pub fn new(
        algebra: &FDAlgebra,
        side: Side,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let f = algebra.field();
        let n = algebra.dim();
        if action.len() != n {
            return Err(AlgebraError::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {n}",
                action.len()
            )));
        }
        if let Some((t, _)) = action
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != dim || m.cols() != dim || m.field() != f)
        {
            return Err(AlgebraError::InvalidModule(format!(
                "action matrix {t} is not {dim}x{dim} over {f}"
            )));
        }
        let module = FDModule {
            side,
            field: f,
            dim,
            action,
        };
        if !module.act(algebra.unit()).is_identity() {
            return Err(AlgebraError::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let expected = module.act(&algebra.product_of_basis(i, j));
                let actual = match side {
                    Side::Left => module.action[i].mul(&module.action[j]),
                    Side::Right => module.action[j].mul(&module.action[i]),
                };
                if actual != expected {
                    return Err(AlgebraError::InvalidModule(format!(
                        "action incompatible with the product b_{i} b_{j}"
                    )));
                }
            }
        }
        Ok(module)
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(algebra: &FDAlgebra, side: Side) -> Self {
        let action = (0..algebra.dim())
            .map(|t| {
                let b = algebra.basis_vector(t);
                match side {
                    Side::Left => algebra.left_mult(&b),
                    Side::Right => algebra.right_mult(&b),
                }
            })
            .collect();
        FDModule {
            side,
            field: algebra.field(),
            dim: algebra.dim(),
            action,
        }
    }

    /// One-dimensional module where `b_t` acts by `chi[t]`.
    pub fn character(algebra: &FDAlgebra, side: Side, chi: &[i64]) -> Result<Self, AlgebraError> {
        let f = algebra.field();
        let action = chi
            .iter()
            .map(|&c| Matrix::from_flat(f, 1, 1, &[c]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(algebra, side, 1, action)
    }

    /// The augmentation character of a preset algebra, if it has one.
    pub fn trivial(algebra: &FDAlgebra, side: Side) -> Result<Self, AlgebraError> {
        let chi = algebra.augmentation().ok_or_else(|| {
            AlgebraError::InvalidModule("algebra has no augmentation character".into())
        })?;
        let chi: Vec<i64> = chi.iter().map(|&x| x as i64).collect();
        Self::character(algebra, side, &chi)
    }

    /// `A / I` where `I` is the one-sided ideal generated by `generators` on
    /// the module's side (`gA` for right modules, `Ag` for left modules).
    pub fn regular_quotient(
        algebra: &FDAlgebra,
        side: Side,
        generators: &[Vec<u32>],
    ) -> Result<Self, AlgebraError> {
        let f = algebra.field();
        let n = algebra.dim();
        let mut ideal = Subspace::new(f, n);
        for g in generators {
            if g.len() != n {
                return Err(AlgebraError::InvalidModule(format!(
                    "ideal generator of length {} in an algebra of dimension {n}",
                    g.len()
                )));
            }
            for t in 0..n {
                let b = algebra.basis_vector(t);
                match side {
                    Side::Right => ideal.insert(&algebra.multiply(g, &b)),
                    Side::Left => ideal.insert(&algebra.multiply(&b, g)),
                };
            }
        }
        // Reduction zeroes the pivot coordinates; the others index the quotient.
        let free: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
        let q = free.len();
        let action = (0..n)
            .map(|t| {
                let b = algebra.basis_vector(t);
                Matrix::from_fn(f, q, q, |row, col| {
                    let e = algebra.basis_vector(free[col]);
                    let image = match side {
                        Side::Right => algebra.multiply(&e, &b),
                        Side::Left => algebra.multiply(&b, &e),
                    };
                    ideal.reduce(&image)[free[row]]
                })
            })
            .collect();
        Self::new(algebra, side, q, action)
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &FDModule) -> Result<Self, AlgebraError> {
        if self.side != other.side || self.field != other.field || self.action.len() != other.action.len() {
            return Err(AlgebraError::InvalidModule("direct sum of incompatible modules".into()));
        }
        let (a, b) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                Matrix::from_fn(self.field, a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x.get(i, j),
                    (false, false) => y.get(i - a, j - a),
                    _ => 0,
                })
            })
            .collect();
        Ok(FDModule {
            side: self.side,
            field: self.field,
            dim: a + b,
            action,
        })
    }

    /// The same data read as a module over `A^op` on the other side.
    pub fn over_opposite(&self) -> FDModule {
        FDModule {
            side: self.side.flip(),
            ..self.clone()
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix by which the algebra element `a` acts.
    pub fn act(&self, a: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (c, mat) in a.iter().zip(&self.action) {
            m.add_scaled(mat, *c);
        }
        m
    }
}

/// How generators of each kernel are chosen while resolving.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ResolutionStrategy {
    /// Every basis vector of the kernel becomes a generator.
    Naive,
    /// Generators are added until they generate the kernel: first the sum of
    /// all kernel basis vectors not yet covered, else the first such vector.
    #[default]
    Greedy,
    /// As `Greedy`, but working modulo `K·rad(A)`; keeps ranks near the
    /// minimal ones.
    Minimal,
}

/// Free resolution `⋯ → A^{r_1} → A^{r_0} → M` of a right module.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    algebra_dim: usize,
    ranks: Vec<usize>,
    augmentation: Matrix,
    differentials: Vec<Matrix>,
}

impl FreeResolution {
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `dim(M) × r_0`, column `i` the image of generator `g_i`.
    pub fn augmentation(&self) -> &Matrix {
        &self.augmentation
    }

    /// `d_k` for `k >= 1`, shape `(r_{k-1}·dim A) × r_k`.
    pub fn differential(&self, k: usize) -> &Matrix {
        &self.differentials[k - 1]
    }

    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Algebra element at block `i` of column `j` of `d_k`.
    fn entry(&self, k: usize, i: usize, j: usize) -> Vec<u32> {
        let n = self.algebra_dim;
        let d = self.differential(k);
        (0..n).map(|s| d.get(i * n + s, j)).collect()
    }
}

/// Right action of `b_t` on `A^r`, blockwise.
fn free_right_action(right: &[Matrix], v: &[u32], t: usize) -> Vec<u32> {
    let n = right[t].rows();
    v.chunks(n).flat_map(|block| right[t].mul_vec(block)).collect()
}

/// Chooses generators of the right submodule spanned by `basis`.
fn select_generators(
    field: PrimeField,
    ambient: usize,
    basis: &[Vec<u32>],
    act: impl Fn(&[u32], usize) -> Vec<u32>,
    algebra_dim: usize,
    strategy: ResolutionStrategy,
    radical: &[Vec<u32>],
) -> Vec<Vec<u32>> {
    let mut span = Subspace::new(field, ambient);
    match strategy {
        ResolutionStrategy::Naive => return basis.to_vec(),
        ResolutionStrategy::Greedy => {}
        ResolutionStrategy::Minimal => {
            // Nakayama: generators of K modulo K·rad(A) generate K.
            for v in basis {
                for r in radical {
                    let mut w = vec![0u32; ambient];
                    for (t, &c) in r.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (x, y) in w.iter_mut().zip(act(v, t)) {
                            *x = field.add(*x, field.mul(c, y));
                        }
                    }
                    span.insert(&w);
                }
            }
        }
    }
    let add = |span: &mut Subspace, v: &[u32]| {
        let mut grew = false;
        for t in 0..algebra_dim {
            grew |= span.insert(&act(v, t));
        }
        grew
    };
    let mut gens = Vec::new();
    loop {
        let missing: Vec<&Vec<u32>> = basis.iter().filter(|v| !span.contains(v)).collect();
        let Some(first) = missing.first() else { break };
        // The sum of everything still missing usually generates far more
        // than a single basis vector (think of idempotent components).
        let mut sum = vec![0u32; ambient];
        for v in &missing {
            for (x, &y) in sum.iter_mut().zip(v.iter()) {
                *x = field.add(*x, y);
            }
        }
        if add(&mut span, &sum) {
            gens.push(sum);
        } else {
            add(&mut span, first);
            gens.push((*first).clone());
        }
    }
    gens
}

/// Matrix of the `GF(p)`-linear map `A^r → target` sending `g_j · b_s` to
/// `image_j · b_s`.
fn expand(images: &[Vec<u32>], target_dim: usize, act: impl Fn(&[u32], usize) -> Vec<u32>, n: usize, field: PrimeField) -> Matrix {
    let cols: Vec<Vec<u32>> = images
        .iter()
        .flat_map(|img| (0..n).map(|s| act(img, s)).collect::<Vec<_>>())
        .collect();
    Matrix::from_columns(field, target_dim, &cols)
}

/// Free resolution of a right module `M` through stage `length`; exactness is
/// verified by rank counting at every stage.
pub fn resolve(
    algebra: &FDAlgebra,
    module: &FDModule,
    length: usize,
    strategy: ResolutionStrategy,
) -> Result<FreeResolution, AlgebraError> {
    if module.side() != Side::Right {
        return Err(AlgebraError::InvalidModule(
            "resolve expects a right module; pass the module over the opposite algebra".into(),
        ));
    }
    if module.action().len() != algebra.dim() {
        return Err(AlgebraError::InvalidModule("module over a different algebra".into()));
    }
    let f = algebra.field();
    let n = algebra.dim();
    let radical = match strategy {
        ResolutionStrategy::Minimal => algebra.radical()?,
        _ => Vec::new(),
    };
    let right: Vec<Matrix> = (0..n).map(|t| algebra.right_mult(&algebra.basis_vector(t))).collect();

    let m = module.dim();
    let module_basis: Vec<Vec<u32>> = (0..m)
        .map(|i| (0..m).map(|j| u32::from(i == j)).collect())
        .collect();
    let module_act = |v: &[u32], t: usize| module.action()[t].mul_vec(v);
    let gens0 = select_generators(f, m, &module_basis, module_act, n, strategy, &radical);
    let augmentation = Matrix::from_columns(f, m, &gens0);
    let mut phi = expand(&gens0, m, module_act, n, f);
    if phi.rank() != m {
        return Err(AlgebraError::NotExact(0));
    }

    let mut ranks = vec![gens0.len()];
    let mut differentials = Vec::new();
    for k in 1..=length {
        let source_dim = ranks[k - 1] * n;
        let kernel = phi.nullspace_basis();
        let kernel_cols: Vec<Vec<u32>> = (0..kernel.cols()).map(|j| kernel.column(j)).collect();
        let act = |v: &[u32], t: usize| free_right_action(&right, v, t);
        let gens = select_generators(f, source_dim, &kernel_cols, act, n, strategy, &radical);
        if gens.len() * n > MAX_FREE_DIM {
            return Err(AlgebraError::SizeGuard(format!(
                "free module of rank {} at stage {k} exceeds {MAX_FREE_DIM} dimensions",
                gens.len()
            )));
        }
        let next_phi = expand(&gens, source_dim, act, n, f);
        if next_phi.rank() != kernel_cols.len() {
            return Err(AlgebraError::NotExact(k));
        }
        ranks.push(gens.len());
        differentials.push(Matrix::from_columns(f, source_dim, &gens));
        phi = next_phi;
    }
    Ok(FreeResolution {
        algebra_dim: n,
        ranks,
        augmentation,
        differentials,
    })
}

/// Which argument of Tor is resolved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TorRoute {
    /// Resolve the right module, tensor with the left one.
    #[default]
    ResolveFirst,
    /// Resolve the left module (as a right `A^op`-module).
    ResolveSecond,
}

/// `d_k ⊗_A N`: block `(i, j)` is the action of `d_k(g_j)_i` on `N`.
fn tensored_differential(res: &FreeResolution, k: usize, left: &FDModule, field: PrimeField) -> Matrix {
    let (r_prev, r) = (res.ranks[k - 1], res.ranks[k]);
    let w = left.dim();
    let mut out = Matrix::zeros(field, r_prev * w, r * w);
    for j in 0..r {
        for i in 0..r_prev {
            let block = left.act(&res.entry(k, i, j));
            for a in 0..w {
                for b in 0..w {
                    let v = block.get(a, b);
                    if v != 0 {
                        out.set(i * w + a, j * w + b, v);
                    }
                }
            }
        }
    }
    out
}

/// `Hom_A(d_{k}, N)`: block `(j, i)` is the right action of `d_k(g_j)_i` on `N`.
fn hom_differential(res: &FreeResolution, k: usize, target: &FDModule, field: PrimeField) -> Matrix {
    let (r_prev, r) = (res.ranks[k - 1], res.ranks[k]);
    let w = target.dim();
    let mut out = Matrix::zeros(field, r * w, r_prev * w);
    for j in 0..r {
        for i in 0..r_prev {
            let block = target.act(&res.entry(k, i, j));
            for a in 0..w {
                for b in 0..w {
                    let v = block.get(a, b);
                    if v != 0 {
                        out.set(j * w + a, i * w + b, v);
                    }
                }
            }
        }
    }
    out
}

fn check_side(m: &FDModule, side: Side, what: &str) -> Result<(), AlgebraError> {
    if m.side() != side {
        return Err(AlgebraError::InvalidModule(format!(
            "{what} must be a {side:?} module"
        )));
    }
    Ok(())
}

/// `Tor^A_n(M, N)` for `n <= truncation`, `M` a right and `N` a left module.
pub fn tor(
    algebra: &FDAlgebra,
    right: &FDModule,
    left: &FDModule,
    truncation: usize,
    strategy: ResolutionStrategy,
    route: TorRoute,
) -> Result<GradedSpace, AlgebraError> {
    check_side(right, Side::Right, "first Tor argument")?;
    check_side(left, Side::Left, "second Tor argument")?;
    let (alg, resolved, other) = match route {
        TorRoute::ResolveFirst => (algebra.clone(), right.clone(), left.clone()),
        TorRoute::ResolveSecond => (algebra.opposite(), left.over_opposite(), right.over_opposite()),
    };
    let f = alg.field();
    let res = resolve(&alg, &resolved, truncation + 1, strategy)?;
    let w = other.dim();
    let ranks: Vec<usize> = (1..=truncation + 1)
        .map(|k| tensored_differential(&res, k, &other, f).rank())
        .collect();
    let dims: Vec<usize> = (0..=truncation)
        .map(|k| {
            let incoming = ranks[k];
            let outgoing = if k == 0 { 0 } else { ranks[k - 1] };
            res.ranks[k] * w - outgoing - incoming
        })
        .collect();
    Ok(GradedSpace::from_dims(truncation, &dims))
}

/// `Ext^n_A(M, N)` for `n <= truncation`, both modules on the same side.
pub fn ext(
    algebra: &FDAlgebra,
    source: &FDModule,
    target: &FDModule,
    truncation: usize,
    strategy: ResolutionStrategy,
) -> Result<GradedSpace, AlgebraError> {
    if source.side() != target.side() {
        return Err(AlgebraError::InvalidModule("Ext arguments must be on the same side".into()));
    }
    let (alg, source, target) = match source.side() {
        Side::Right => (algebra.clone(), source.clone(), target.clone()),
        Side::Left => (algebra.opposite(), source.over_opposite(), target.over_opposite()),
    };
    let f = alg.field();
    let res = resolve(&alg, &source, truncation + 1, strategy)?;
    let w = target.dim();
    // ranks[k] = rank of δ^k : C^k → C^{k+1}, which is Hom(d_{k+1}, N).
    let ranks: Vec<usize> = (0..=truncation)
        .map(|k| hom_differential(&res, k + 1, &target, f).rank())
        .collect();
    let dims: Vec<usize> = (0..=truncation)
        .map(|k| {
            let outgoing = ranks[k];
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            res.ranks[k] * w - outgoing - incoming
        })
        .collect();
    Ok(GradedSpace::from_dims(truncation, &dims))
}

/// `dim(M ⊗_A N)` computed directly as the coequalizer of `m b ⊗ n` and `m ⊗ b n`.
pub fn tensor_product_dim(
    algebra: &FDAlgebra,
    right: &FDModule,
    left: &FDModule,
) -> Result<usize, AlgebraError> {
    check_side(right, Side::Right, "first argument")?;
    check_side(left, Side::Left, "second argument")?;
    let f = algebra.field();
    let (a, b) = (right.dim(), left.dim());
    let id_a = Matrix::identity(f, a);
    let id_b = Matrix::identity(f, b);
    let rel: Vec<Matrix> = (0..algebra.dim())
        .map(|t| right.action()[t].kronecker(&id_b).sub(&id_a.kronecker(&left.action()[t])))
        .collect();
    let refs: Vec<&Matrix> = rel.iter().collect();
    Ok(a * b - Matrix::hstack(f, a * b, &refs).rank())
}

/// `A` as a right and as a left `A^e`-module: `m·(a⊗b) = b m a` and
/// `(a⊗b)·m = a m b`.
pub fn bimodule_structures(algebra: &FDAlgebra, envelope: &FDAlgebra) -> Result<(FDModule, FDModule), AlgebraError> {
    let n = algebra.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| algebra.left_mult(&algebra.basis_vector(i))).collect();
    let rights: Vec<Matrix> = (0..n).map(|i| algebra.right_mult(&algebra.basis_vector(i))).collect();
    let mut right_action = Vec::with_capacity(n * n);
    let mut left_action = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            right_action.push(lefts[j].mul(&rights[i]));
            left_action.push(lefts[i].mul(&rights[j]));
        }
    }
    Ok((
        FDModule::new(envelope, Side::Right, n, right_action)?,
        FDModule::new(envelope, Side::Left, n, left_action)?,
    ))
}

/// Hochschild homology `HH_n(A) = Tor^{A ⊗ A^op}_n(A, A)` for `n <= truncation`.
pub fn hochschild(
    algebra: &FDAlgebra,
    truncation: usize,
    strategy: ResolutionStrategy,
) -> Result<GradedSpace, AlgebraError> {
    let n = algebra.dim();
    if n * n > MAX_ENVELOPING_DIM {
        return Err(AlgebraError::SizeGuard(format!(
            "enveloping algebra of dimension {} exceeds {MAX_ENVELOPING_DIM}",
            n * n
        )));
    }
    let envelope = algebra.enveloping();
    let (right, left) = bimodule_structures(algebra, &envelope)?;
    tor(&envelope, &right, &left, truncation, strategy, TorRoute::ResolveFirst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn presets_are_valid_algebras() {
        for name in [
            "field(3)",
            "dual_numbers(2)",
            "truncated_poly(3, 3)",
            "group_algebra_cyclic(2, 2)",
            "group_algebra_cyclic(3, 2)",
            "product_fields(5, 2)",
            "gf4_over_gf2",
            "upper_triangular(3)",
        ] {
            let preset: AlgebraPreset = name.parse().unwrap();
            let a = preset.build().unwrap();
            assert_eq!(preset.to_string().replace(' ', ""), name.replace(' ', ""));
            // Revalidate through the checked constructor.
            let cube: Vec<i64> = a.structure.iter().map(|&x| x as i64).collect();
            let unit: Vec<i64> = a.unit.iter().map(|&x| x as i64).collect();
            assert!(FDAlgebra::new(a.field(), a.dim(), &cube, &unit).is_ok());
        }
        assert!("matrix_algebra(2)".parse::<AlgebraPreset>().is_err());
        assert!("field(2".parse::<AlgebraPreset>().is_err());
    }

    #[test]
    fn upper_triangular_is_hereditary() {
        let f = gf(3);
        let a = FDAlgebra::upper_triangular(f);
        assert_ne!(a.multiply(&[1, 0, 0], &[0, 1, 0]), a.multiply(&[0, 1, 0], &[1, 0, 0]));
        assert_eq!(a.radical().unwrap().len(), 1);
        let gens = [vec![], vec![vec![1, 0, 0]], vec![vec![0, 0, 1]], vec![vec![0, 1, 0]]];
        for g in &gens {
            let m = FDModule::regular_quotient(&a, Side::Right, g).unwrap();
            for h in &gens {
                let n = FDModule::regular_quotient(&a, Side::Left, h).unwrap();
                let t = tor(&a, &m, &n, 4, ResolutionStrategy::Greedy, TorRoute::ResolveFirst).unwrap();
                // Global dimension one.
                assert!(t.dims()[2..].iter().all(|&x| x == 0), "{t}");
                assert_eq!(t.dim(0), tensor_product_dim(&a, &m, &n).unwrap());
            }
        }
    }

    #[test]
    fn augmentations_are_checked() {
        let f = gf(3);
        let a = FDAlgebra::group_algebra_cyclic(f, 3).unwrap();
        assert!(a.clone().augmented(&[1, 1, 1]).is_ok());
        assert!(a.clone().augmented(&[1, 2, 1]).is_err());
        assert!(a.augmented(&[0, 0, 0]).is_err());
    }

    #[test]
    fn regular_quotients_and_sums() {
        let f = gf(2);
        let a = FDAlgebra::dual_numbers(f);
        let q = FDModule::regular_quotient(&a, Side::Right, &[vec![0, 1]]).unwrap();
        assert_eq!(q.dim(), 1);
        let k = FDModule::trivial(&a, Side::Right).unwrap();
        assert_eq!(q.action(), k.action());
        assert_eq!(FDModule::regular_quotient(&a, Side::Right, &[vec![1, 0]]).unwrap().dim(), 0);
        assert_eq!(FDModule::regular_quotient(&a, Side::Left, &[]).unwrap().dim(), 2);
        let s = q.direct_sum(&k).unwrap();
        let kl = FDModule::trivial(&a, Side::Left).unwrap();
        let t = tor(&a, &s, &kl, 3, ResolutionStrategy::Minimal, TorRoute::ResolveFirst).unwrap();
        assert_eq!(t.dims(), &[2, 2, 2, 2]);
        assert!(q.direct_sum(&kl).is_err());
    }

    #[test]
    fn invalid_algebras_are_rejected() {
        let f = gf(2);
        // Non-associative: b1·b1 = b0 + b1 with b0 not a unit.
        assert!(FDAlgebra::new(f, 2, &[1, 0, 0, 1, 0, 1, 1, 0], &[0, 1]).is_err());
        assert!(FDAlgebra::new(f, 1, &[1, 0], &[1]).is_err());
        assert!(FDAlgebra::new(f, 1, &[1], &[0]).is_err());
    }

    #[test]
    fn invalid_modules_are_rejected() {
        let a = FDAlgebra::dual_numbers(gf(3));
        let f = a.field();
        // t acting invertibly contradicts t² = 0.
        let bad = vec![Matrix::identity(f, 1), Matrix::identity(f, 1)];
        assert!(FDModule::new(&a, Side::Left, 1, bad).is_err());
        assert!(FDModule::new(&a, Side::Left, 1, vec![Matrix::identity(f, 1)]).is_err());
        assert!(FDModule::character(&a, Side::Left, &[2, 0]).is_err());
        assert!(FDModule::trivial(&FDAlgebra::gf4_over_gf2(), Side::Left).is_err());
    }

    #[test]
    fn resolution_examples() {
        let f2 = gf(2);
        let k = FDAlgebra::field_algebra(f2);
        let m = FDModule::trivial(&k, Side::Right).unwrap();
        for s in [ResolutionStrategy::Naive, ResolutionStrategy::Greedy, ResolutionStrategy::Minimal] {
            assert_eq!(resolve(&k, &m, 3, s).unwrap().ranks(), &[1, 0, 0, 0]);
        }

        let dual = FDAlgebra::dual_numbers(f2);
        let triv = FDModule::trivial(&dual, Side::Right).unwrap();
        let res = resolve(&dual, &triv, 5, ResolutionStrategy::Minimal).unwrap();
        assert_eq!(res.ranks(), &[1, 1, 1, 1, 1, 1]);
        for k in 1..=5 {
            // Each differential is multiplication by t.
            assert_eq!(res.differential(k).column(0), vec![0, 1]);
        }
        assert_eq!(
            resolve(&dual, &triv, 5, ResolutionStrategy::Greedy).unwrap().ranks(),
            &[1, 1, 1, 1, 1, 1]
        );

        // The first simple of GF(2)×GF(2) is projective but not free: every
        // kernel is the complementary simple, so free ranks stay at one.
        let prod = FDAlgebra::product_fields(f2, 2).unwrap();
        let simple = FDModule::trivial(&prod, Side::Right).unwrap();
        assert_eq!(
            resolve(&prod, &simple, 3, ResolutionStrategy::Minimal).unwrap().ranks(),
            &[1, 1, 1, 1]
        );
    }

    #[test]
    fn naive_resolution_is_exact_but_larger() {
        let dual = FDAlgebra::dual_numbers(gf(3));
        let triv = FDModule::trivial(&dual, Side::Right).unwrap();
        let res = resolve(&dual, &triv, 3, ResolutionStrategy::Naive).unwrap();
        assert_eq!(res.ranks(), &[1, 1, 1, 1]);
        let reg = FDModule::regular(&dual, Side::Right);
        let res = resolve(&dual, &reg, 2, ResolutionStrategy::Naive).unwrap();
        assert_eq!(res.ranks()[0], 2);
        assert!(res.ranks()[1] > 0);
        let t = tor(&dual, &reg, &FDModule::trivial(&dual, Side::Left).unwrap(), 1, ResolutionStrategy::Naive, TorRoute::ResolveFirst).unwrap();
        assert_eq!(t.dims(), &[1, 0]);
    }

    #[test]
    fn resolve_rejects_left_modules() {
        let dual = FDAlgebra::dual_numbers(gf(2));
        let left = FDModule::trivial(&dual, Side::Left).unwrap();
        assert!(resolve(&dual, &left, 2, ResolutionStrategy::Greedy).is_err());
    }

    #[test]
    fn tor_examples() {
        for p in [2, 3, 5] {
            let k = FDAlgebra::field_algebra(gf(p));
            let m = FDModule::trivial(&k, Side::Right).unwrap();
            let n = FDModule::trivial(&k, Side::Left).unwrap();
            let t = tor(&k, &m, &n, 4, ResolutionStrategy::Greedy, TorRoute::ResolveFirst).unwrap();
            assert_eq!(t.dims(), &[1, 0, 0, 0, 0]);
        }

        let dual = FDAlgebra::dual_numbers(gf(2));
        let m = FDModule::trivial(&dual, Side::Right).unwrap();
        let n = FDModule::trivial(&dual, Side::Left).unwrap();
        let t = tor(&dual, &m, &n, 10, ResolutionStrategy::Greedy, TorRoute::ResolveFirst).unwrap();
        assert_eq!(t.dims(), &[1; 11]);

        let prod = FDAlgebra::product_fields(gf(2), 2).unwrap();
        let first = FDModule::character(&prod, Side::Right, &[1, 0]).unwrap();
        let second = FDModule::character(&prod, Side::Left, &[0, 1]).unwrap();
        let t = tor(&prod, &first, &second, 4, ResolutionStrategy::Greedy, TorRoute::ResolveFirst).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn ext_examples() {
        let k = FDAlgebra::field_algebra(gf(7));
        let m = FDModule::trivial(&k, Side::Left).unwrap();
        assert_eq!(ext(&k, &m, &m, 3, ResolutionStrategy::Greedy).unwrap().dims(), &[1, 0, 0, 0]);

        let dual = FDAlgebra::dual_numbers(gf(2));
        let m = FDModule::trivial(&dual, Side::Right).unwrap();
        assert_eq!(ext(&dual, &m, &m, 6, ResolutionStrategy::Greedy).unwrap().dims(), &[1; 7]);
        let ml = FDModule::trivial(&dual, Side::Left).unwrap();
        assert_eq!(ext(&dual, &ml, &ml, 6, ResolutionStrategy::Minimal).unwrap().dims(), &[1; 7]);

        let prod = FDAlgebra::product_fields(gf(2), 2).unwrap();
        let first = FDModule::character(&prod, Side::Right, &[1, 0]).unwrap();
        assert_eq!(ext(&prod, &first, &first, 4, ResolutionStrategy::Greedy).unwrap().dims(), &[1, 0, 0, 0, 0]);
        let second = FDModule::character(&prod, Side::Right, &[0, 1]).unwrap();
        assert!(ext(&prod, &first, &second, 4, ResolutionStrategy::Greedy).unwrap().is_zero());
    }

    #[test]
    fn ext_of_regular_module_vanishes_above_zero() {
        let a = FDAlgebra::truncated_poly(gf(3), 3).unwrap();
        let reg = FDModule::regular(&a, Side::Right);
        let triv = FDModule::trivial(&a, Side::Right).unwrap();
        // Hom_A(A, k) = k, and A is free.
        assert_eq!(ext(&a, &reg, &triv, 4, ResolutionStrategy::Greedy).unwrap().dims(), &[1, 0, 0, 0, 0]);
        // Ext(k, A) for the self-injective algebra k[t]/t^3: Hom(k, A) = soc(A), higher vanish.
        assert_eq!(ext(&a, &triv, &reg, 4, ResolutionStrategy::Greedy).unwrap().dims(), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn hochschild_examples() {
        for p in [2, 3, 5] {
            let k = FDAlgebra::field_algebra(gf(p));
            assert_eq!(
                hochschild(&k, 8, ResolutionStrategy::Greedy).unwrap().dims(),
                &[1, 0, 0, 0, 0, 0, 0, 0, 0]
            );
        }
        let gf4 = FDAlgebra::gf4_over_gf2();
        assert_eq!(
            hochschild(&gf4, 8, ResolutionStrategy::Greedy).unwrap().dims(),
            &[2, 0, 0, 0, 0, 0, 0, 0, 0]
        );
        let dual = FDAlgebra::dual_numbers(gf(2));
        let hh = hochschild(&dual, 8, ResolutionStrategy::Greedy).unwrap();
        assert!(hh.dims()[1..].iter().all(|&d| d > 0));
        let big = FDAlgebra::truncated_poly(gf(2), 9).unwrap();
        assert!(matches!(
            hochschild(&big, 2, ResolutionStrategy::Greedy),
            Err(AlgebraError::SizeGuard(_))
        ));
    }

    #[test]
    fn radicals_of_presets() {
        let f2 = gf(2);
        assert!(FDAlgebra::field_algebra(f2).radical().unwrap().is_empty());
        assert!(FDAlgebra::gf4_over_gf2().is_semisimple().unwrap());
        assert!(FDAlgebra::product_fields(gf(3), 3).unwrap().is_semisimple().unwrap());
        assert_eq!(FDAlgebra::dual_numbers(f2).radical().unwrap().len(), 1);
        assert_eq!(FDAlgebra::dual_numbers(gf(5)).radical().unwrap().len(), 1);
        // k[C_2] over GF(2) is local with 1-dimensional radical spanned by 1 + g.
        let c2 = FDAlgebra::group_algebra_cyclic(f2, 2).unwrap();
        assert_eq!(c2.radical().unwrap(), vec![vec![1, 1]]);
        // k[C_2] over GF(3) is semisimple.
        assert!(FDAlgebra::group_algebra_cyclic(gf(3), 2).unwrap().is_semisimple().unwrap());
        assert_eq!(FDAlgebra::truncated_poly(gf(3), 4).unwrap().radical().unwrap().len(), 3);
        assert!(FDAlgebra::gf4_over_gf2().enveloping().is_semisimple().unwrap());
    }

    #[test]
    fn coequalizer_matches_tor_zero() {
        let a = FDAlgebra::truncated_poly(gf(3), 3).unwrap();
        let reg_r = FDModule::regular(&a, Side::Right);
        let reg_l = FDModule::regular(&a, Side::Left);
        let triv_l = FDModule::trivial(&a, Side::Left).unwrap();
        assert_eq!(tensor_product_dim(&a, &reg_r, &reg_l).unwrap(), 3);
        assert_eq!(tensor_product_dim(&a, &reg_r, &triv_l).unwrap(), 1);
        let t = tor(&a, &reg_r, &triv_l, 2, ResolutionStrategy::Greedy, TorRoute::ResolveFirst).unwrap();
        assert_eq!(t.dim(0), 1);
    }

    #[test]
    fn opposite_and_tensor_are_algebras() {
        let a = FDAlgebra::truncated_poly(gf(2), 3).unwrap();
        let g = FDAlgebra::gf4_over_gf2();
        let t = a.tensor(&g);
        let cube: Vec<i64> = t.structure.iter().map(|&x| x as i64).collect();
        let unit: Vec<i64> = t.unit.iter().map(|&x| x as i64).collect();
        assert!(FDAlgebra::new(t.field(), t.dim(), &cube, &unit).is_ok());
        let e = g.enveloping();
        assert_eq!(e.dim(), 4);
    }
}
