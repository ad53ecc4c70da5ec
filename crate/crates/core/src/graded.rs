//! Graded vector spaces truncated at a fixed degree, Künneth products, the
//! even-degree series `T_*` and the truncated polynomial algebras `E*_r`, `E*_∞`.

use std::fmt::{self, Write as _};

use crate::gf_linalg::PrimeField;

/// Finite dimension table `degree -> dimension` for degrees `0..=truncation`.
///
/// Optionally carries per-degree basis labels, used where a group acts on an
/// explicit basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    dims: Vec<usize>,
    labels: Option<Vec<Vec<String>>>,
}

impl GradedSpace {
    /// Builds a table truncated at `truncation`; missing degrees are zero and
    /// entries above the truncation are dropped.
    pub fn from_dims(truncation: usize, dims: &[usize]) -> Self {
        let mut d = dims.to_vec();
        d.resize(truncation + 1, 0);
        GradedSpace {
            dims: d,
            labels: None,
        }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::from_dims(truncation, &[])
    }

    /// One-dimensional space concentrated in degree zero.
    pub fn unit(truncation: usize) -> Self {
        Self::from_dims(truncation, &[1])
    }

    /// A single class in the given degree.
    pub fn point(truncation: usize, degree: usize) -> Self {
        let mut g = Self::zero(truncation);
        if degree <= truncation {
            g.dims[degree] = 1;
        }
        g
    }

    /// Attaches basis labels. Returns `None` if a label count disagrees with
    /// the dimension in some degree.
    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Option<Self> {
        if labels.len() != self.dims.len()
            || labels.iter().zip(&self.dims).any(|(l, &d)| l.len() != d)
        {
            return None;
        }
        self.labels = Some(labels);
        Some(self)
    }

    pub fn truncation(&self) -> usize {
        self.dims.len() - 1
    }

    /// Dimension in degree `n`; zero above the truncation.
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> Option<&[Vec<String>]> {
        self.labels.as_deref()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Same dimensions, labels dropped.
    pub fn dims_only(&self) -> Self {
        GradedSpace {
            dims: self.dims.clone(),
            labels: None,
        }
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let mut dims = self.dims.clone();
        dims.resize(truncation + 1, 0);
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.resize(truncation + 1, Vec::new());
            l
        });
        GradedSpace { dims, labels }
    }

    pub fn direct_sum(&self, other: &GradedSpace) -> GradedSpace {
        let d = self.truncation().min(other.truncation());
        let dims: Vec<usize> = (0..=d).map(|n| self.dim(n) + other.dim(n)).collect();
        GradedSpace { dims, labels: None }
    }

    pub fn scaled(&self, k: usize) -> GradedSpace {
        GradedSpace {
            dims: self.dims.iter().map(|&d| d * k).collect(),
            labels: None,
        }
    }

    /// Künneth tensor product: degreewise convolution, truncated at the smaller
    /// truncation. When both sides carry labels the result carries pair labels
    /// `a⊗b` in lexicographic order (degree of the left factor, then left
    /// label, then right label).
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let d = self.truncation().min(other.truncation());
        let mut dims = vec![0usize; d + 1];
        for (i, &a) in self.dims.iter().enumerate().take(d + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.dims.iter().enumerate().take(d + 1 - i) {
                dims[i + j] += a * b;
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(la), Some(lb)) => {
                let mut out = vec![Vec::new(); d + 1];
                for (n, slot) in out.iter_mut().enumerate() {
                    for i in 0..=n {
                        for x in &la[i] {
                            for y in &lb[n - i] {
                                slot.push(format!("{x}⊗{y}"));
                            }
                        }
                    }
                }
                Some(out)
            }
            _ => None,
        };
        GradedSpace { dims, labels }
    }

    /// Poincaré polynomial as text, e.g. `1 + t^2 + 2t^4`. The zero space
    /// renders as `0`.
    pub fn poincare_series(&self) -> String {
        let mut out = String::new();
        for (n, &d) in self.dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let coeff = if d == 1 && n > 0 {
                String::new()
            } else {
                d.to_string()
            };
            match n {
                0 => out.push_str(&d.to_string()),
                1 => {
                    let _ = write!(out, "{coeff}t");
                }
                _ => {
                    let _ = write!(out, "{coeff}t^{n}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Two-column CSV with header, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dimension\n");
        for (n, d) in self.dims.iter().enumerate() {
            let _ = writeln!(out, "{n},{d}");
        }
        out
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poincare_series())
    }
}

/// `T_*`: one dimension in every even degree, zero in odd degrees.
pub fn t_star(truncation: usize) -> GradedSpace {
    let dims: Vec<usize> = (0..=truncation).map(|n| usize::from(n % 2 == 0)).collect();
    GradedSpace { dims, labels: None }
}

/// Number of polynomial generators `e_1, e_2, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generators {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Generators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generators::Finite(r) => write!(f, "{r}"),
            Generators::Infinite => f.write_str("∞"),
        }
    }
}

/// Degree of the generator `e_i` (1-based): `2 p^(i-1)`, or `None` on overflow.
pub fn generator_degree(p: u32, i: usize) -> Option<u64> {
    let exp = u32::try_from(i.checked_sub(1)?).ok()?;
    (p as u64).checked_pow(exp)?.checked_mul(2)
}

/// Monomial `e_1^{a_1} ⋯ e_r^{a_r}` with `0 <= a_i < p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EMonomial {
    p: u32,
    exponents: Vec<u32>,
}

impl EMonomial {
    /// Trailing zero exponents are dropped so equal monomials compare equal.
    /// Returns `None` if an exponent is `>= p`.
    pub fn new(p: u32, exponents: &[u32]) -> Option<Self> {
        if exponents.iter().any(|&a| a >= p) {
            return None;
        }
        let mut e = exponents.to_vec();
        while e.last() == Some(&0) {
            e.pop();
        }
        Some(EMonomial { p, exponents: e })
    }

    pub fn one(p: u32) -> Self {
        EMonomial {
            p,
            exponents: Vec::new(),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `2 Σ a_i p^(i-1)`.
    pub fn degree(&self) -> u64 {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| a as u64 * generator_degree(self.p, i + 1).unwrap_or(u64::MAX / 4))
            .sum()
    }
}

impl fmt::Display for EMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if a == 1 {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "e{}^{}", i + 1, a)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Product in `k[e_1, e_2, ...]/<e_i^p>`; `None` is the zero element.
pub fn e_multiply(a: &EMonomial, b: &EMonomial) -> Option<EMonomial> {
    assert_eq!(a.p, b.p, "monomials over different primes");
    let len = a.exponents.len().max(b.exponents.len());
    let sum: Vec<u32> = (0..len)
        .map(|i| a.exponents.get(i).unwrap_or(&0) + b.exponents.get(i).unwrap_or(&0))
        .collect();
    EMonomial::new(a.p, &sum)
}

/// Monomial basis of `E*_r` (or `E*_∞`) in degrees `<= truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMonomialAlgebra {
    p: u32,
    generators: Generators,
    truncation: usize,
    basis: Vec<EMonomial>,
}

impl EMonomialAlgebra {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn generators(&self) -> Generators {
        self.generators
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Basis sorted by degree, then by exponent vector.
    pub fn basis(&self) -> &[EMonomial] {
        &self.basis
    }

    pub fn dims(&self) -> GradedSpace {
        let mut dims = vec![0usize; self.truncation + 1];
        for m in &self.basis {
            dims[m.degree() as usize] += 1;
        }
        GradedSpace { dims, labels: None }
    }

    /// Dimension table with monomials as basis labels.
    pub fn labeled_dims(&self) -> GradedSpace {
        let mut labels = vec![Vec::new(); self.truncation + 1];
        for m in &self.basis {
            labels[m.degree() as usize].push(m.to_string());
        }
        self.dims()
            .with_labels(labels)
            .expect("labels built from the basis")
    }

    /// Product within the truncated algebra: zero if the exponents overflow or
    /// the degree exceeds the truncation.
    pub fn multiply(&self, a: &EMonomial, b: &EMonomial) -> Option<EMonomial> {
        let m = e_multiply(a, b)?;
        if let Generators::Finite(r) = self.generators {
            if m.exponents.len() > r {
                return None;
            }
        }
        (m.degree() <= self.truncation as u64).then_some(m)
    }
}

/// Enumerates the monomial basis of `E*_r` (`Finite(r)`) or `E*_∞` up to the
/// truncation degree. Generators whose degree exceeds the truncation cannot
/// contribute and are skipped.
pub fn e_algebra(field: PrimeField, generators: Generators, truncation: usize) -> EMonomialAlgebra {
    let p = field.p();
    let cap = truncation as u64;
    let mut degrees = Vec::new();
    let mut i = 1;
    loop {
        if let Generators::Finite(r) = generators {
            if i > r {
                break;
            }
        }
        match generator_degree(p, i) {
            Some(deg) if deg <= cap => degrees.push(deg),
            _ => break,
        }
        i += 1;
    }

    let mut basis = Vec::new();
    let mut exps = vec![0u32; degrees.len()];
    enumerate_monomials(p, &degrees, 0, cap, &mut exps, &mut basis);
    basis.sort_by(|a: &EMonomial, b| (a.degree(), &a.exponents).cmp(&(b.degree(), &b.exponents)));
    EMonomialAlgebra {
        p,
        generators,
        truncation,
        basis,
    }
}

fn enumerate_monomials(
    p: u32,
    degrees: &[u64],
    idx: usize,
    budget: u64,
    exps: &mut Vec<u32>,
    out: &mut Vec<EMonomial>,
) {
    if idx == degrees.len() {
        out.push(EMonomial::new(p, exps).expect("exponents below p"));
        return;
    }
    let mut a = 0;
    while a < p && a as u64 * degrees[idx] <= budget {
        exps[idx] = a;
        enumerate_monomials(p, degrees, idx + 1, budget - a as u64 * degrees[idx], exps, out);
        a += 1;
    }
    exps[idx] = 0;
}
