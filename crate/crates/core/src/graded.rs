//! Z2-grading data, the weight lattice with its super bilinear form, and
//! parity-homogeneous linear maps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::coeff::RatFunc;
use crate::linalg::{self, Vector};
use crate::sparse::SparseMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("entry ({row},{col}) violates homogeneity of a map of parity {parity}")]
    NotHomogeneous { row: usize, col: usize, parity: Parity },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("K image is not diagonal")]
    NotDiagonal,
    #[error("diagonal entry {entry} of K_{index} is not a power of q_{index}")]
    NonIntegralWeight { index: usize, entry: RatFunc },
}

/// Element of Z2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Parity(pub bool);

impl Parity {
    pub const EVEN: Parity = Parity(false);
    pub const ODD: Parity = Parity(true);

    pub fn is_odd(self) -> bool {
        self.0
    }

    /// (-1)^self.
    pub fn sign(self) -> i32 {
        if self.0 {
            -1
        } else {
            1
        }
    }

    pub fn from_int(k: i64) -> Parity {
        Parity(k.rem_euclid(2) == 1)
    }
}

impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity(self.0 && rhs.0)
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::EVEN, |a, b| a + b)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

/// The pair (m, n) of gl(m|n) together with the index parity function.
///
/// Indices are 1-based: `I = {1, ..., m+n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradingContext {
    pub m: usize,
    pub n: usize,
}

impl GradingContext {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "m and n must be positive");
        GradingContext { m, n }
    }

    /// m + n.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.size()
    }

    /// Indices of the simple roots, I' = {1, ..., m+n-1}.
    pub fn simple_indices(&self) -> std::ops::Range<usize> {
        1..self.size()
    }

    pub fn parity(&self, a: usize) -> Parity {
        debug_assert!(a >= 1 && a <= self.size());
        Parity(a > self.m)
    }

    /// The exponent ±1 with q_a = q^{(-1)^{[a]}}.
    pub fn q_sign(&self, a: usize) -> i32 {
        self.parity(a).sign()
    }

    /// q_a^e.
    pub fn q_a_pow(&self, a: usize, e: i32) -> RatFunc {
        RatFunc::q_pow(self.q_sign(a) * e)
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.indices().map(|a| self.parity(a)).collect()
    }
}

/// Integral weight, coordinates λ_a in the basis ε_a.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(size: usize) -> Self {
        Weight(vec![0; size])
    }

    /// ε_a (1-based).
    pub fn epsilon(size: usize, a: usize) -> Self {
        let mut w = Self::zero(size);
        w.0[a - 1] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The super form (ε_a, ε_b) = (-1)^{[a]} δ_ab.
    pub fn form(&self, other: &Weight, ctx: &GradingContext) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .map(|(i, (x, y))| i64::from(ctx.q_sign(i + 1)) * x * y)
            .sum()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| k * x).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// 2ρ = Σ_{a<b} (-1)^{[a]+[b]} (ε_a - ε_b).
pub fn two_rho(ctx: &GradingContext) -> Weight {
    let mut w = Weight::zero(ctx.size());
    for a in ctx.indices() {
        for b in a + 1..=ctx.size() {
            let s = i64::from((ctx.parity(a) + ctx.parity(b)).sign());
            w.0[a - 1] += s;
            w.0[b - 1] -= s;
        }
    }
    w
}

/// Finite-dimensional graded space: one parity bit (and optionally one
/// weight) per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    parities: Vec<Parity>,
}

impl GradedSpace {
    pub fn new(parities: Vec<Parity>) -> Arc<Self> {
        Arc::new(GradedSpace { parities })
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    /// Graded tensor product with lexicographic basis order.
    pub fn tensor(&self, other: &GradedSpace) -> Arc<Self> {
        let mut p = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.parities {
            for &b in &other.parities {
                p.push(a + b);
            }
        }
        Self::new(p)
    }
}

/// Parity-homogeneous linear map between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    domain: Arc<GradedSpace>,
    codomain: Arc<GradedSpace>,
    parity: Parity,
    matrix: SparseMatrix,
}

impl GradedMap {
    pub fn new(
        domain: Arc<GradedSpace>,
        codomain: Arc<GradedSpace>,
        parity: Parity,
        matrix: SparseMatrix,
    ) -> Result<Self, GradedError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(GradedError::Shape(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        for (r, c, _) in matrix.entries() {
            if codomain.parity(r) != domain.parity(c) + parity {
                return Err(GradedError::NotHomogeneous { row: r, col: c, parity });
            }
        }
        Ok(GradedMap {
            domain,
            codomain,
            parity,
            matrix,
        })
    }

    pub fn identity(space: Arc<GradedSpace>) -> Self {
        let m = SparseMatrix::identity(space.dim());
        GradedMap {
            domain: space.clone(),
            codomain: space,
            parity: Parity::EVEN,
            matrix: m,
        }
    }

    pub fn domain(&self) -> &Arc<GradedSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GradedSpace> {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        if other.codomain != self.domain {
            return Err(GradedError::Shape("composition of incompatible maps".into()));
        }
        Ok(GradedMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity + other.parity,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// (f⊗g)(v⊗w) = (-1)^{[g][v]} f(v)⊗g(w).
    pub fn koszul_tensor(f: &GradedMap, g: &GradedMap) -> GradedMap {
        GradedMap {
            domain: f.domain.tensor(&g.domain),
            codomain: f.codomain.tensor(&g.codomain),
            parity: f.parity + g.parity,
            matrix: koszul_kron(&f.matrix, &g.matrix, g.parity, f.domain.parities()),
        }
    }
}

/// Matrix of f⊗g under the Koszul rule, given the parity of `g` and the
/// parities of the domain basis of `f`.
pub fn koszul_kron(f: &SparseMatrix, g: &SparseMatrix, g_parity: Parity, f_domain: &[Parity]) -> SparseMatrix {
    if g_parity.is_odd() {
        f.kron_signed(g, |j| f_domain[j].is_odd())
    } else {
        f.kron(g)
    }
}

/// Graded flip P(v⊗w) = (-1)^{[v][w]} w⊗v from V⊗W to W⊗V.
pub fn graded_flip(v: &[Parity], w: &[Parity]) -> SparseMatrix {
    let (d1, d2) = (v.len(), w.len());
    SparseMatrix::from_triplets(
        d1 * d2,
        d1 * d2,
        (0..d1).flat_map(|i| {
            (0..d2).map(move |j| {
                let s = (v[i] * w[j]).sign();
                (j * d1 + i, i * d2 + j, RatFunc::from_int(i64::from(s)))
            })
        }),
    )
}

/// Basis of ∩ ker(maps); an empty list yields the whole space.
pub fn joint_kernel(maps: &[&GradedMap], dim: usize) -> Vec<Vector> {
    let ms: Vec<&SparseMatrix> = maps.iter().map(|m| m.matrix()).collect();
    linalg::joint_kernel(&ms, dim)
}

/// Reads the exponent λ with `entry = q_a^λ`.
pub fn weight_exponent(ctx: &GradingContext, a: usize, entry: &RatFunc) -> Result<i64, GradedError> {
    match entry.as_monomial() {
        Some((c, e)) if c == &num_rational::BigRational::from_integer(1.into()) => {
            Ok(i64::from(e * ctx.q_sign(a)))
        }
        _ => Err(GradedError::NonIntegralWeight {
            index: a,
            entry: entry.clone(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_rho_values() {
        assert_eq!(two_rho(&GradingContext::new(1, 1)).0, vec![-1, 1]);
        assert_eq!(two_rho(&GradingContext::new(2, 1)).0, vec![0, -2, 2]);
        assert_eq!(two_rho(&GradingContext::new(1, 2)).0, vec![-2, 2, 0]);
    }

    #[test]
    fn two_rho_pairing_with_simple_roots() {
        // (2ρ, α_a) = (α_a, α_a) for every simple root, the super analogue
        // of ρ being half the sum of positive roots.
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let ctx = GradingContext::new(m, n);
            let r = two_rho(&ctx);
            for a in ctx.simple_indices() {
                let alpha = &Weight::epsilon(ctx.size(), a) - &Weight::epsilon(ctx.size(), a + 1);
                assert_eq!(r.form(&alpha, &ctx), alpha.form(&alpha, &ctx), "({m},{n}) a={a}");
            }
        }
    }

    #[test]
    fn koszul_identity_and_parity() {
        let ctx = GradingContext::new(1, 1);
        let e = GradedSpace::new(ctx.parities());
        let id = GradedMap::identity(e.clone());
        let t = GradedMap::koszul_tensor(&id, &id);
        assert_eq!(t.matrix(), &SparseMatrix::identity(4));
        let odd = GradedMap::new(
            e.clone(),
            e.clone(),
            Parity::ODD,
            SparseMatrix::from_triplets(2, 2, [(0, 1, RatFunc::one())]),
        )
        .unwrap();
        let t = GradedMap::koszul_tensor(&odd, &odd);
        assert_eq!(t.parity(), Parity::EVEN);
        // g odd acting after v_2 (odd): sign -1 on the v_2 column block.
        assert_eq!(t.matrix().get(0, 3), RatFunc::from_int(-1));
    }

    #[test]
    fn homogeneity_is_enforced() {
        let e = GradedSpace::new(GradingContext::new(1, 1).parities());
        let bad = GradedMap::new(
            e.clone(),
            e,
            Parity::EVEN,
            SparseMatrix::from_triplets(2, 2, [(0, 1, RatFunc::one())]),
        );
        assert!(matches!(bad, Err(GradedError::NotHomogeneous { .. })));
    }
}
