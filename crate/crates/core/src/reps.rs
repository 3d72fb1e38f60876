//! Concrete representations of U_q(gl(m|n)): the vector module and its dual,
//! graded tensor products, relation checking, weights, highest-weight
//! extraction, decomposition into irreducibles, the Λ⁽¹⁾/Λ⁽²⁾ classification
//! and unitarity checks.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coeff::{RatFunc, Rational};
use crate::graded::{koszul_kron, weight_exponent, GradedError, GradedMap, GradedSpace, GradingContext, Parity, Weight};
use crate::linalg::{self, IncrementalBasis, Vector};
use crate::report::Check;
use crate::sparse::SparseMatrix;
use crate::uq::{self, alphabet, Generator, TensorExpression, UqExpression, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("representations belong to different contexts")]
    ContextMismatch,
    #[error("subspace is not invariant under {0}")]
    NotInvariant(Generator),
    #[error("vector is not parity homogeneous")]
    InhomogeneousVector,
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("weight {0} needs tensor power {1}, beyond the configured limit {2}")]
    BeyondDeskScale(Weight, usize, usize),
    #[error("forms of different star types cannot be combined")]
    StarTypeMismatch,
}

/// Generator images on a graded space.
#[derive(Clone, Debug)]
pub struct Representation {
    ctx: GradingContext,
    space: Arc<GradedSpace>,
    images: BTreeMap<Generator, GradedMap>,
}

impl Representation {
    /// Validates shapes, parities and diagonal invertible K images.
    pub fn new(
        ctx: GradingContext,
        space: Arc<GradedSpace>,
        images: BTreeMap<Generator, GradedMap>,
    ) -> Result<Self, RepError> {
        for g in alphabet(&ctx) {
            let img = images
                .get(&g)
                .ok_or_else(|| RepError::Decomposition(format!("missing image of {g}")))?;
            if img.parity() != g.parity(&ctx) || img.domain() != &space || img.codomain() != &space {
                return Err(GradedError::Shape(format!("image of {g}")).into());
            }
            if g.is_cartan() {
                let m = img.matrix();
                if !m.is_diagonal() || m.nnz() != space.dim() {
                    return Err(GradedError::NotDiagonal.into());
                }
            }
        }
        Ok(Representation { ctx, space, images })
    }

    /// Builds from plain matrices, deriving parities from the generators.
    pub fn from_matrices(
        ctx: GradingContext,
        space: Arc<GradedSpace>,
        mut mats: impl FnMut(Generator) -> SparseMatrix,
    ) -> Result<Self, RepError> {
        let mut images = BTreeMap::new();
        for g in alphabet(&ctx) {
            let map = GradedMap::new(space.clone(), space.clone(), g.parity(&ctx), mats(g))?;
            images.insert(g, map);
        }
        Self::new(ctx, space, images)
    }

    pub fn ctx(&self) -> &GradingContext {
        &self.ctx
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn image(&self, g: Generator) -> &GradedMap {
        &self.images[&g]
    }

    pub fn image_word(&self, w: &Word) -> SparseMatrix {
        let mut it = w.letters().iter();
        let Some(first) = it.next() else {
            return SparseMatrix::identity(self.dim());
        };
        let mut m = self.images[first].matrix().clone();
        for g in it {
            m = m.mul(self.images[g].matrix());
        }
        m
    }

    pub fn image_expr(&self, x: &UqExpression) -> SparseMatrix {
        let mut acc = SparseMatrix::zeros(self.dim(), self.dim());
        for (w, c) in x.terms() {
            acc = acc.add(&self.image_word(w).scale(c));
        }
        acc
    }

    /// Restriction to an invariant subspace spanned by the given columns.
    pub fn restrict(&self, columns: &[Vector]) -> Result<Representation, RepError> {
        let parities = columns
            .iter()
            .map(|v| vector_parity(&self.space, v))
            .collect::<Result<Vec<_>, _>>()?;
        let p = linalg::left_inverse(self.dim(), columns)
            .ok_or_else(|| RepError::Decomposition("dependent basis".into()))?;
        let b = SparseMatrix::from_columns(self.dim(), columns);
        let sub = GradedSpace::new(parities);
        let mut images = BTreeMap::new();
        for g in alphabet(&self.ctx) {
            let gb = self.images[&g].matrix().mul(&b);
            let m = p.mul(&gb);
            if b.mul(&m) != gb {
                return Err(RepError::NotInvariant(g));
            }
            images.insert(g, GradedMap::new(sub.clone(), sub.clone(), g.parity(&self.ctx), m)?);
        }
        Representation::new(self.ctx, sub, images)
    }
}

/// Parity of a homogeneous vector.
pub fn vector_parity(space: &GradedSpace, v: &[RatFunc]) -> Result<Parity, RepError> {
    let mut found: Option<Parity> = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        match found {
            None => found = Some(space.parity(i)),
            Some(p) if p != space.parity(i) => return Err(RepError::InhomogeneousVector),
            _ => {}
        }
    }
    Ok(found.unwrap_or(Parity::EVEN))
}

/// The vector module 𝔼: K_a v_b = q_a^{δ_ab} v_b, E_{a,a±1} v_b = δ_{b,a±1} v_a.
pub fn vector_rep(ctx: &GradingContext) -> Representation {
    let n = ctx.size();
    let space = GradedSpace::new(ctx.parities());
    let unit = |r: usize, c: usize| SparseMatrix::from_triplets(n, n, [(r - 1, c - 1, RatFunc::one())]);
    Representation::from_matrices(*ctx, space, |g| match g {
        Generator::K(a) | Generator::Kinv(a) => {
            let e = if matches!(g, Generator::K(_)) { 1 } else { -1 };
            SparseMatrix::diagonal(
                ctx.indices()
                    .map(|b| if b == a { ctx.q_a_pow(a, e) } else { RatFunc::one() })
                    .collect(),
            )
        }
        Generator::Raise(a) => unit(a, a + 1),
        Generator::Lower(a) => unit(a + 1, a),
    })
    .expect("vector representation is well formed")
}

/// The one-dimensional trivial module.
pub fn trivial_rep(ctx: &GradingContext) -> Representation {
    let space = GradedSpace::new(vec![Parity::EVEN]);
    Representation::from_matrices(*ctx, space, |g| {
        if g.is_cartan() {
            SparseMatrix::identity(1)
        } else {
            SparseMatrix::zeros(1, 1)
        }
    })
    .expect("trivial representation is well formed")
}

/// Dual module on the dual basis: image(x)_{ab} = (-1)^{[x][b]} r(S x)_{ba}.
pub fn dual_rep(r: &Representation) -> Representation {
    let ctx = *r.ctx();
    let space = r.space().clone();
    Representation::from_matrices(ctx, space.clone(), |g| {
        let sx = r.image_expr(&uq::antipode(&ctx, g)).transpose();
        let pg = g.parity(&ctx);
        sx.map(|_, b, v| if (pg * space.parity(b)).is_odd() { -v } else { v.clone() })
    })
    .expect("dual representation is well formed")
}

/// Image of an ℓ-fold tensor expression in ρ_1⊗…⊗ρ_ℓ under the Koszul rule.
pub fn image_tensor(t: &TensorExpression, factors: &[&Representation]) -> SparseMatrix {
    assert_eq!(t.arity(), factors.len());
    let ctx = *factors[0].ctx();
    let total: usize = factors.iter().map(|r| r.dim()).product();
    let mut acc = SparseMatrix::zeros(total, total);
    for (legs, c) in t.terms() {
        acc = acc.add(&koszul_chain(&ctx, legs, factors).scale(c));
    }
    acc
}

fn koszul_chain(ctx: &GradingContext, legs: &[Word], factors: &[&Representation]) -> SparseMatrix {
    let last = legs.len() - 1;
    let mut m = factors[last].image_word(&legs[last]);
    let mut parity = legs[last].parity(ctx);
    for i in (0..last).rev() {
        let f = factors[i].image_word(&legs[i]);
        m = koszul_kron(&f, &m, parity, factors[i].space().parities());
        parity = parity + legs[i].parity(ctx);
    }
    m
}

/// Graded tensor product, with images computed from the coproduct.
pub fn tensor_rep(r1: &Representation, r2: &Representation) -> Result<Representation, RepError> {
    if r1.ctx() != r2.ctx() {
        return Err(RepError::ContextMismatch);
    }
    let ctx = *r1.ctx();
    let space = r1.space().tensor(r2.space());
    Representation::from_matrices(ctx, space, |g| image_tensor(&uq::coproduct(&ctx, g), &[r1, r2]))
}

/// Left-nested tensor product of the given factors; the empty product is
/// the trivial module.
pub fn tensor_all(ctx: &GradingContext, factors: &[&Representation]) -> Representation {
    let mut it = factors.iter();
    let Some(first) = it.next() else {
        return trivial_rep(ctx);
    };
    let mut acc = (*first).clone();
    for f in it {
        acc = tensor_rep(&acc, f).expect("same context");
    }
    acc
}

pub fn tensor_power(r: &Representation, k: usize) -> Representation {
    tensor_all(r.ctx(), &vec![r; k])
}

/// Evaluates every defining relation in `r`; a check fails with the first
/// nonzero matrix entry as witness.
pub fn check_relations(r: &Representation) -> Vec<Check> {
    uq::defining_relations(r.ctx())
        .into_iter()
        .map(|rel| {
            let m = r.image_expr(&rel.expr);
            let witness = m
                .first_nonzero()
                .map(|(i, j, v)| format!("nonzero residual {v} at ({i},{j})"));
            Check::from_witness(rel.name, witness)
        })
        .collect()
}

/// Weight of every basis vector, read off the diagonal K images.
pub fn basis_weights(r: &Representation) -> Result<Vec<Weight>, RepError> {
    let ctx = r.ctx();
    let mut out = vec![Weight::zero(ctx.size()); r.dim()];
    for a in ctx.indices() {
        let k = r.image(Generator::K(a)).matrix();
        if !k.is_diagonal() {
            return Err(GradedError::NotDiagonal.into());
        }
        for (i, w) in out.iter_mut().enumerate() {
            w.0[a - 1] = weight_exponent(ctx, a, &k.get(i, i))?;
        }
    }
    Ok(out)
}

/// Joint K-eigenspaces as lists of basis indices.
pub fn weight_spaces(r: &Representation) -> Result<BTreeMap<Weight, Vec<usize>>, RepError> {
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in basis_weights(r)?.into_iter().enumerate() {
        out.entry(w).or_default().push(i);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightRecord {
    pub weight: Weight,
    pub vector: Vector,
    pub lowest_weight: Option<Weight>,
}

impl HighestWeightRecord {
    /// λ† = −(lowest weight), when known.
    pub fn dagger(&self) -> Option<Weight> {
        self.lowest_weight.as_ref().map(|w| -w)
    }
}

/// Vectors of the weight spaces annihilated by all the given operators.
fn extremal_vectors(r: &Representation, ops: &[Generator]) -> Result<Vec<(Weight, Vector)>, RepError> {
    let dim = r.dim();
    let mut out = Vec::new();
    for (w, idx) in weight_spaces(r)? {
        let restricted: Vec<SparseMatrix> = ops
            .iter()
            .map(|&g| {
                let all_rows: Vec<usize> = (0..dim).collect();
                r.image(g).matrix().select(&all_rows, &idx)
            })
            .collect();
        let refs: Vec<&SparseMatrix> = restricted.iter().collect();
        for k in linalg::joint_kernel(&refs, idx.len()) {
            let mut v = vec![RatFunc::zero(); dim];
            for (pos, &i) in idx.iter().enumerate() {
                v[i] = k[pos].clone();
            }
            out.push((w.clone(), v));
        }
    }
    Ok(out)
}

fn raising(ctx: &GradingContext) -> Vec<Generator> {
    ctx.simple_indices().map(Generator::Raise).collect()
}

fn lowering(ctx: &GradingContext) -> Vec<Generator> {
    ctx.simple_indices().map(Generator::Lower).collect()
}

/// Basis of the joint kernel of the raising images, split by weight.
pub fn highest_weight_vectors(r: &Representation) -> Result<Vec<HighestWeightRecord>, RepError> {
    Ok(extremal_vectors(r, &raising(r.ctx()))?
        .into_iter()
        .map(|(weight, vector)| HighestWeightRecord {
            weight,
            vector,
            lowest_weight: None,
        })
        .collect())
}

/// Weights of the vectors annihilated by all lowering images.
pub fn lowest_weights(r: &Representation) -> Result<Vec<Weight>, RepError> {
    Ok(extremal_vectors(r, &lowering(r.ctx()))?
        .into_iter()
        .map(|(w, _)| w)
        .collect())
}

/// One irreducible summand: its highest-weight data, the embedding basis
/// (columns in the ambient space) and the restricted module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub highest: HighestWeightRecord,
    pub basis: Vec<Vector>,
    pub rep: Representation,
}

impl Summand {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Closure of `start` under the lowering images.
fn lowering_closure(r: &Representation, start: &Vector) -> Result<Vec<Vector>, RepError> {
    let lower: Vec<&SparseMatrix> = lowering(r.ctx()).iter().map(|&g| r.image(g).matrix()).collect();
    let mut basis = IncrementalBasis::new();
    let mut out = vec![start.clone()];
    basis.insert(start);
    let mut next = 0;
    while next < out.len() {
        let v = out[next].clone();
        next += 1;
        for l in &lower {
            let w = l.apply(&v);
            if w.iter().all(RatFunc::is_zero) {
                continue;
            }
            if basis.insert(&w) {
                out.push(w);
                if out.len() > r.dim() {
                    return Err(RepError::Decomposition("closure exceeded the dimension".into()));
                }
            }
        }
    }
    Ok(out)
}

/// Splits `r` into irreducible summands generated by its highest-weight
/// vectors. Requires complete reducibility, which holds for the unitary
/// modules in scope; anything else is reported as an error.
pub fn decompose(r: &Representation) -> Result<Vec<Summand>, RepError> {
    let mut all = IncrementalBasis::new();
    let mut out = Vec::new();
    for hw in highest_weight_vectors(r)? {
        let basis = lowering_closure(r, &hw.vector)?;
        for v in &basis {
            if !all.insert(v) {
                return Err(RepError::Decomposition(format!(
                    "submodule of highest weight {} meets the previous summands",
                    hw.weight
                )));
            }
        }
        let rep = r.restrict(&basis)?;
        let low = lowest_weights(&rep)?;
        if low.len() != 1 {
            return Err(RepError::Decomposition(format!(
                "summand of highest weight {} has {} lowest-weight vectors",
                hw.weight,
                low.len()
            )));
        }
        out.push(Summand {
            highest: HighestWeightRecord {
                lowest_weight: Some(low[0].clone()),
                ..hw
            },
            basis,
            rep,
        });
    }
    if all.len() != r.dim() {
        return Err(RepError::Decomposition(format!(
            "summands span {} of {} dimensions",
            all.len(),
            r.dim()
        )));
    }
    Ok(out)
}

/// Membership data for an integral weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClass {
    pub in_lambda1: bool,
    pub in_lambda2: bool,
    /// The partition p with λ = λ^{(p)}, when λ ∈ Λ⁽¹⁾; padded to m+n
    /// entries.
    pub partition: Option<Vec<i64>>,
}

/// The (m|n)-hook partition p with λ^{(p)} = λ, if any.
///
/// Rows 1..m of p are the even coordinates; the rows below are the
/// conjugate of the odd coordinates. This allows more than m+n rows, as
/// needed for tensor powers beyond m+n.
pub fn lambda1_partition(ctx: &GradingContext, w: &Weight) -> Option<Vec<i64>> {
    let (m, n) = (ctx.m, ctx.n);
    let c = w.coords();
    let non_increasing = |s: &[i64]| s.windows(2).all(|x| x[0] >= x[1]);
    if c.iter().any(|&x| x < 0) || !non_increasing(&c[..m]) || !non_increasing(&c[m..]) {
        return None;
    }
    let odd = &c[m..];
    let mut p: Vec<i64> = c[..m].to_vec();
    let longest = odd.first().copied().unwrap_or(0);
    for nu in 1..=longest {
        p.push(odd.iter().filter(|&&x| x >= nu).count() as i64);
    }
    if !non_increasing(&p) {
        return None;
    }
    if p.len() > m && p[m] > n as i64 {
        return None;
    }
    while p.len() < m + n {
        p.push(0);
    }
    Some(p)
}

/// Decides Λ⁽¹⁾ membership directly and Λ⁽²⁾ membership by decomposing
/// tensor powers of 𝔼 up to `max_power` and comparing λ†.
pub struct WeightClassifier {
    ctx: GradingContext,
    max_power: usize,
    daggers: Mutex<BTreeMap<usize, Vec<Weight>>>,
}

impl WeightClassifier {
    pub fn new(ctx: GradingContext, max_power: usize) -> Self {
        WeightClassifier {
            ctx,
            max_power,
            daggers: Mutex::new(BTreeMap::new()),
        }
    }

    /// λ† for every summand of 𝔼^{⊗k}.
    pub fn daggers(&self, k: usize) -> Result<Vec<Weight>, RepError> {
        if let Some(d) = self.daggers.lock().unwrap().get(&k) {
            return Ok(d.clone());
        }
        let e = vector_rep(&self.ctx);
        let d: Vec<Weight> = decompose(&tensor_power(&e, k))?
            .iter()
            .map(|s| s.highest.dagger().expect("lowest weight is filled"))
            .collect();
        self.daggers.lock().unwrap().insert(k, d.clone());
        Ok(d)
    }

    pub fn classify(&self, w: &Weight) -> Result<WeightClass, RepError> {
        let partition = lambda1_partition(&self.ctx, w);
        let k = -w.coords().iter().sum::<i64>();
        let in_lambda2 = if k < 0 {
            false
        } else if k as usize > self.max_power {
            return Err(RepError::BeyondDeskScale(w.clone(), k as usize, self.max_power));
        } else {
            self.daggers(k as usize)?.contains(w)
        };
        Ok(WeightClass {
            in_lambda1: partition.is_some(),
            in_lambda2,
            partition,
        })
    }
}

pub fn classify_weight(ctx: &GradingContext, w: &Weight) -> Result<WeightClass, RepError> {
    WeightClassifier::new(*ctx, 3).classify(w)
}

/// Hermitian form given by its Gram matrix in the stored basis, paired with
/// the star type used for adjoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesquilinearForm {
    pub gram: SparseMatrix,
    pub star_type: u8,
}

impl SesquilinearForm {
    /// (v_a, v_b) = δ_ab Π_{c<a} q_c^{-1} on 𝔼, with the type-1 star.
    pub fn vector(ctx: &GradingContext) -> Self {
        let diag = ctx
            .indices()
            .map(|a| (1..a).fold(RatFunc::one(), |acc, c| &acc * &ctx.q_a_pow(c, -1)))
            .collect();
        SesquilinearForm {
            gram: SparseMatrix::diagonal(diag),
            star_type: 1,
        }
    }

    /// Product form ((v⊗w, v'⊗w')) = (v, v')(w, w').
    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        if self.star_type != other.star_type {
            return Err(RepError::StarTypeMismatch);
        }
        Ok(SesquilinearForm {
            gram: self.gram.kron(&other.gram),
            star_type: self.star_type,
        })
    }

    /// Form on the dual basis induced by (v†, w†)' = (K_{2ρ} w, v), where
    /// v† = (v, ·). With Gram G this is r(K_{2ρ}) G^{-1}; the star type
    /// switches because the dual is unitary for *' = (-1)^{[a]} *.
    pub fn dual(&self, r: &Representation) -> Result<Self, RepError> {
        if !self.gram.is_diagonal() {
            return Err(GradedError::NotDiagonal.into());
        }
        let inv = SparseMatrix::diagonal(
            (0..r.dim())
                .map(|i| self.gram.get(i, i).inv().map_err(|e| RepError::Decomposition(e.to_string())))
                .collect::<Result<_, _>>()?,
        );
        Ok(SesquilinearForm {
            gram: r.image_word(&uq::k2rho(r.ctx())).mul(&inv),
            star_type: 3 - self.star_type,
        })
    }
}

/// Adjointness (g v, w) = (v, g* w) for every generator at q = q0, and
/// positivity of the Gram matrix through its leading minors.
pub fn unitarity_check(r: &Representation, form: &SesquilinearForm, q0: &Rational) -> Vec<Check> {
    let ctx = *r.ctx();
    let mut out = Vec::new();
    if q0 <= &Rational::zero() || q0.is_one() {
        out.push(Check::fail("unitarity", format!("q0 = {q0} must be positive and not 1")));
        return out;
    }
    for g in alphabet(&ctx) {
        let name = format!("adjoint {g} (type {})", form.star_type);
        let star = match uq::star(&ctx, g, form.star_type) {
            Ok(s) => s,
            Err(e) => {
                out.push(Check::fail(name, e.to_string()));
                continue;
            }
        };
        let lhs = r.image(g).matrix().transpose().mul(&form.gram);
        let rhs = form.gram.mul(&r.image_expr(&star));
        let witness = match lhs.sub(&rhs).specialize(q0) {
            Err(e) => Some(e.to_string()),
            Ok(d) => d
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, x)| (i, j, x)))
                .find(|(_, _, x)| !x.is_zero())
                .map(|(i, j, x)| format!("(g v_{j}, v_{i}) - (v_{j}, g* v_{i}) = {x} at q0 = {q0}")),
        };
        out.push(Check::from_witness(name, witness));
    }
    let witness = match form.gram.specialize(q0) {
        Err(e) => Some(e.to_string()),
        Ok(g) => linalg::leading_minors(&g)
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_positive())
            .map(|(k, x)| format!("leading minor {} = {x} at q0 = {q0}", k + 1)),
    };
    out.push(Check::from_witness("gram positive definite", witness));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, n: usize) -> GradingContext {
        GradingContext::new(m, n)
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn vector_module_entries() {
        let c = ctx(1, 1);
        let e = vector_rep(&c);
        assert_eq!(e.image(Generator::K(2)).matrix().get(1, 1), r("q^-1"));
        let e12 = e.image(Generator::Raise(1)).matrix();
        assert_eq!(e12.get(0, 1), r("1"));
        assert_eq!(e12.apply(&[r("1"), r("0")]), vec![r("0"), r("0")]);
        assert!(e12.mul(e12).is_zero());
    }

    #[test]
    fn dual_module_cartan_and_highest_weight() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let c = ctx(m, n);
            let d = dual_rep(&vector_rep(&c));
            for a in c.indices() {
                let k = d.image(Generator::K(a)).matrix();
                for b in c.indices() {
                    let want = if a == b { c.q_a_pow(a, -1) } else { RatFunc::one() };
                    assert_eq!(k.get(b - 1, b - 1), want);
                }
            }
            let hw = highest_weight_vectors(&d).unwrap();
            assert_eq!(hw.len(), 1);
            assert_eq!(hw[0].weight, -&Weight::epsilon(c.size(), c.size()));
        }
    }

    #[test]
    fn tensor_image_example() {
        // (π⊗π)Δ(E_12) v_2⊗v_2 = q v_1⊗v_2 − v_2⊗v_1 at (1,1).
        let c = ctx(1, 1);
        let e = vector_rep(&c);
        let t = tensor_rep(&e, &e).unwrap();
        let mut v = vec![RatFunc::zero(); 4];
        v[3] = RatFunc::one();
        let out = t.image(Generator::Raise(1)).matrix().apply(&v);
        assert_eq!(out, vec![r("0"), r("q"), r("-1"), r("0")]);
    }

    #[test]
    fn weight_space_examples() {
        let c = ctx(2, 1);
        let ws = weight_spaces(&vector_rep(&c)).unwrap();
        assert_eq!(ws.len(), 3);
        assert!(ws.contains_key(&Weight::epsilon(3, 1)));
        let c = ctx(1, 1);
        let e = vector_rep(&c);
        let ws = weight_spaces(&tensor_rep(&e, &e).unwrap()).unwrap();
        assert_eq!(ws[&Weight(vec![2, 0])].len(), 1);
        assert_eq!(ws[&Weight(vec![1, 1])].len(), 2);
        assert_eq!(ws[&Weight(vec![0, 2])].len(), 1);
        let ws = weight_spaces(&trivial_rep(&c)).unwrap();
        assert_eq!(ws.keys().cloned().collect::<Vec<_>>(), vec![Weight::zero(2)]);
    }

    #[test]
    fn lambda1_examples() {
        let c = ctx(2, 1);
        assert_eq!(lambda1_partition(&c, &Weight(vec![1, 0, 0])), Some(vec![1, 0, 0]));
        assert_eq!(lambda1_partition(&c, &Weight(vec![1, 1, 1])), Some(vec![1, 1, 1]));
        assert_eq!(lambda1_partition(&c, &Weight(vec![1, 0, 1])), None);
        assert_eq!(lambda1_partition(&c, &Weight(vec![0, 0, -1])), None);
        // (1,1): the column (1,1,1) has highest weight ε1 + 2ε2.
        assert_eq!(lambda1_partition(&ctx(1, 1), &Weight(vec![1, 2])), Some(vec![1, 1, 1]));
        assert_eq!(lambda1_partition(&ctx(1, 1), &Weight(vec![2, 2])), Some(vec![2, 1, 1]));
        assert_eq!(lambda1_partition(&ctx(1, 1), &Weight(vec![0, 1])), None);
    }

    #[test]
    fn gram_of_vector_form() {
        let f = SesquilinearForm::vector(&ctx(1, 1));
        assert_eq!(f.gram, SparseMatrix::diagonal(vec![r("1"), r("q^-1")]));
        let q0 = Rational::new(3.into(), 2.into());
        let g = f.gram.specialize(&q0).unwrap();
        assert_eq!(g[1][1], Rational::new(2.into(), 3.into()));
    }
}
