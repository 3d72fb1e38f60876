//! Coordinate functions t_{ab}, t̄_{ab} on U_q(gl(m|n)) realized as linear
//! functionals through matrix elements of graded tensor products of the
//! vector module and its dual, together with their Hopf and star maps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::RatFunc;
use crate::expr::{self, ExprAlgebra, ParseError};
use crate::graded::{two_rho, GradingContext, Parity, Weight};
use crate::linalg::{self, Vector};
use crate::reps::{dual_rep, tensor_rep, vector_rep, Representation, Summand};
use crate::sparse::SparseMatrix;
use crate::uq::{self, UqExpression, Word};

/// t_{ab} (unbarred) or t̄_{ab} (barred).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordLetter {
    pub barred: bool,
    pub row: usize,
    pub col: usize,
}

impl CoordLetter {
    pub fn t(row: usize, col: usize) -> Self {
        CoordLetter { barred: false, row, col }
    }

    pub fn tb(row: usize, col: usize) -> Self {
        CoordLetter { barred: true, row, col }
    }

    pub fn parity(&self, ctx: &GradingContext) -> Parity {
        ctx.parity(self.row) + ctx.parity(self.col)
    }
}

impl fmt::Display for CoordLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.barred { "tb" } else { "t" };
        write!(f, "{name}[{},{}]", self.row, self.col)
    }
}

pub type CoordWord = Vec<CoordLetter>;

pub fn word_parity(ctx: &GradingContext, w: &[CoordLetter]) -> Parity {
    w.iter().map(|l| l.parity(ctx)).sum()
}

/// Q(q)-combination of coordinate words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GqElement {
    terms: BTreeMap<CoordWord, RatFunc>,
}

impl GqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(RatFunc::one(), Vec::new())
    }

    pub fn letter(l: CoordLetter) -> Self {
        Self::term(RatFunc::one(), vec![l])
    }

    pub fn term(c: RatFunc, w: CoordWord) -> Self {
        let mut out = Self::zero();
        out.add_term(c, w);
        out
    }

    pub fn add_term(&mut self, c: RatFunc, w: CoordWord) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordWord, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(v * c, w.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(c1 * c2, w);
            }
        }
        out
    }

    /// Common parity of all terms, or `None` if inhomogeneous; zero is even.
    pub fn parity(&self, ctx: &GradingContext) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|w| word_parity(ctx, w));
        let first = ps.next().unwrap_or(Parity::EVEN);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn map_words(&self, mut f: impl FnMut(&[CoordLetter]) -> GqElement) -> GqElement {
        let mut out = GqElement::zero();
        for (w, c) in &self.terms {
            out = out.add(&f(w).scale(c));
        }
        out
    }

    pub fn parse(ctx: &GradingContext, src: &str) -> Result<Self, ParseError> {
        expr::evaluate(&expr::parse(src)?, &CoordParser { ctx: *ctx })
    }
}

fn fmt_word(w: &[CoordLetter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}

impl fmt::Display for GqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if c.is_one() { fmt_word(w) } else { format!("({c})*{}", fmt_word(w)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GqElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct CoordParser {
    ctx: GradingContext,
}

impl ExprAlgebra for CoordParser {
    type Elem = GqElement;
    fn scalar(&self, c: RatFunc) -> GqElement {
        GqElement::term(c, Vec::new())
    }
    fn symbol(&self, name: &str, groups: &[Vec<i64>], pos: usize) -> Result<GqElement, ParseError> {
        let barred = match name {
            "t" => false,
            "tb" => true,
            _ => return Err(ParseError::new(pos, format!("unknown symbol '{name}'"))),
        };
        let ix = expr::indices(groups, pos, 2)?;
        if ix.iter().any(|&i| i > self.ctx.size()) {
            return Err(ParseError::new(pos, "index out of range"));
        }
        Ok(GqElement::letter(CoordLetter { barred, row: ix[0], col: ix[1] }))
    }
    fn add(&self, a: &GqElement, b: &GqElement) -> GqElement {
        a.add(b)
    }
    fn neg(&self, a: &GqElement) -> GqElement {
        a.scale(&RatFunc::from_int(-1))
    }
    fn mul(&self, a: &GqElement, b: &GqElement) -> GqElement {
        a.mul(b)
    }
    fn as_scalar(&self, a: &GqElement) -> Option<RatFunc> {
        if a.is_zero() {
            return Some(RatFunc::zero());
        }
        match a.terms.iter().next() {
            Some((w, c)) if a.len() == 1 && w.is_empty() => Some(c.clone()),
            _ => None,
        }
    }
}

/// Element of G_q ⊗ G_q.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GqTensor {
    terms: BTreeMap<(CoordWord, CoordWord), RatFunc>,
}

impl GqTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut out = Self::zero();
        out.add_term(RatFunc::one(), Vec::new(), Vec::new());
        out
    }

    pub fn add_term(&mut self, c: RatFunc, left: CoordWord, right: CoordWord) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CoordWord, CoordWord), &RatFunc)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(c.clone(), l.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(-c, l.clone(), r.clone());
        }
        out
    }

    /// Product with the rule (a⊗b)(c⊗d) = (-1)^{[b][c]} ac⊗bd.
    pub fn mul(&self, other: &Self, ctx: &GradingContext) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            let pb = word_parity(ctx, b);
            for ((c, d), c2) in &other.terms {
                let mut v = c1 * c2;
                if (pb * word_parity(ctx, c)).is_odd() {
                    v = -v;
                }
                let mut l = a.clone();
                l.extend_from_slice(c);
                let mut r = b.clone();
                r.extend_from_slice(d);
                out.add_term(v, l, r);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for GqTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| format!("({c})*{} ⊗ {}", fmt_word(l), fmt_word(r)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Δ(t_ab) = Σ_c (-1)^{([a]+[c])([c]+[b])} t_ac ⊗ t_cb, and the same for t̄.
pub fn coproduct_letter(ctx: &GradingContext, l: CoordLetter) -> GqTensor {
    let mut out = GqTensor::zero();
    for c in ctx.indices() {
        let e = (ctx.parity(l.row) + ctx.parity(c)) * (ctx.parity(c) + ctx.parity(l.col));
        let left = CoordLetter { col: c, ..l };
        let right = CoordLetter { row: c, ..l };
        out.add_term(RatFunc::from_int(e.sign() as i64), vec![left], vec![right]);
    }
    out
}

/// Multiplicative extension of [`coproduct_letter`].
pub fn coproduct(ctx: &GradingContext, f: &GqElement) -> GqTensor {
    let mut out = GqTensor::zero();
    for (w, c) in f.terms() {
        let mut acc = GqTensor::one();
        for &l in w {
            acc = acc.mul(&coproduct_letter(ctx, l), ctx);
        }
        for ((l, r), v) in acc.terms {
            out.add_term(&v * c, l, r);
        }
    }
    out
}

/// ⟨f, 1⟩: the empty word gives 1, and t_ab, t̄_ab give δ_ab.
pub fn counit(f: &GqElement) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (w, c) in f.terms() {
        if w.iter().all(|l| l.row == l.col) {
            acc = &acc + c;
        }
    }
    acc
}

/// S(t_ab) = (-1)^{[a][b]+[a]} t̄_ba and
/// S(t̄_ab) = (-1)^{[a][b]+[b]} q^{(2ρ, ε_b − ε_a)} t_ba.
pub fn antipode_letter(ctx: &GradingContext, l: CoordLetter) -> GqElement {
    let (a, b) = (l.row, l.col);
    let (pa, pb) = (ctx.parity(a), ctx.parity(b));
    if !l.barred {
        let s = pa * pb + pa;
        GqElement::term(RatFunc::from_int(s.sign() as i64), vec![CoordLetter::tb(b, a)])
    } else {
        let s = pa * pb + pb;
        let rho = two_rho(ctx);
        let e = rho.form(&(&Weight::epsilon(ctx.size(), b) - &Weight::epsilon(ctx.size(), a)), ctx);
        GqElement::term(
            RatFunc::signed_q_pow(s.sign(), e as i32),
            vec![CoordLetter::t(b, a)],
        )
    }
}

/// Graded anti-automorphism: S(fg) = (-1)^{[f][g]} S(g) S(f).
pub fn antipode(ctx: &GradingContext, f: &GqElement) -> GqElement {
    f.map_words(|w| {
        let mut sign = Parity::EVEN;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                sign = sign + w[i].parity(ctx) * w[j].parity(ctx);
            }
        }
        let mut acc = GqElement::term(RatFunc::from_int(sign.sign() as i64), Vec::new());
        for &l in w.iter().rev() {
            acc = acc.mul(&antipode_letter(ctx, l));
        }
        acc
    })
}

/// *(t_ab) = (-1)^{(θ+[a])([a]+[b])} t̄_ab and *(t̄_ab) = same sign · t_ab.
/// Only the parity of θ enters.
pub fn star_letter(ctx: &GradingContext, l: CoordLetter, theta_odd: bool) -> GqElement {
    let s = (Parity(theta_odd) + ctx.parity(l.row)) * l.parity(ctx);
    GqElement::term(
        RatFunc::from_int(s.sign() as i64),
        vec![CoordLetter { barred: !l.barred, ..l }],
    )
}

/// Anti-linear anti-automorphism; q is real, so coefficients are fixed.
pub fn star(ctx: &GradingContext, f: &GqElement, theta_odd: bool) -> GqElement {
    f.map_words(|w| {
        let mut acc = GqElement::one();
        for &l in w.iter().rev() {
            acc = acc.mul(&star_letter(ctx, l, theta_odd));
        }
        acc
    })
}

/// *(f⊗g) = (-1)^{[f][g]} f*⊗g*.
pub fn star_tensor(ctx: &GradingContext, t: &GqTensor, theta_odd: bool) -> GqTensor {
    let mut out = GqTensor::zero();
    for ((l, r), c) in t.terms() {
        let sl = star(ctx, &GqElement::term(c.clone(), l.clone()), theta_odd);
        let sr = star(ctx, &GqElement::term(RatFunc::one(), r.clone()), theta_odd);
        let sign = word_parity(ctx, l) * word_parity(ctx, r);
        for (wl, cl) in sl.terms() {
            for (wr, cr) in sr.terms() {
                let v = cl * cr;
                out.add_term(if sign.is_odd() { -v } else { v }, wl.clone(), wr.clone());
            }
        }
    }
    out
}

/// Evaluates coordinate words on U_q words through matrix elements of the
/// graded tensor products of 𝔼 (for t) and 𝔼† (for t̄). Tensor modules and
/// word images are cached; the evaluator is safe to share across threads.
pub struct CoordEvaluator {
    ctx: GradingContext,
    reps: RwLock<HashMap<Vec<bool>, Arc<Representation>>>,
    images: RwLock<HashMap<(Vec<bool>, Word), Arc<SparseMatrix>>>,
}

impl CoordEvaluator {
    pub fn new(ctx: GradingContext) -> Self {
        let mut reps = HashMap::new();
        let e = vector_rep(&ctx);
        reps.insert(vec![true], Arc::new(dual_rep(&e)));
        reps.insert(vec![false], Arc::new(e));
        CoordEvaluator {
            ctx,
            reps: RwLock::new(reps),
            images: RwLock::new(HashMap::new()),
        }
    }

    pub fn ctx(&self) -> &GradingContext {
        &self.ctx
    }

    /// The module ρ_1⊗…⊗ρ_ℓ for the given bar pattern, nested to the left.
    pub fn module(&self, pattern: &[bool]) -> Arc<Representation> {
        assert!(!pattern.is_empty());
        if let Some(r) = self.reps.read().unwrap().get(pattern) {
            return r.clone();
        }
        let (init, last) = pattern.split_at(pattern.len() - 1);
        let r = Arc::new(tensor_rep(&self.module(init), &self.module(last)).expect("same context"));
        self.reps.write().unwrap().insert(pattern.to_vec(), r.clone());
        r
    }

    fn image(&self, pattern: &[bool], x: &Word) -> Arc<SparseMatrix> {
        let key = (pattern.to_vec(), x.clone());
        if let Some(m) = self.images.read().unwrap().get(&key) {
            return m.clone();
        }
        let r = self.module(pattern);
        let m = match x.letters().split_last() {
            None => SparseMatrix::identity(r.dim()),
            Some((g, init)) => self.image(pattern, &Word(init.to_vec())).mul(r.image(*g).matrix()),
        };
        let m = Arc::new(m);
        self.images.write().unwrap().insert(key, m.clone());
        m
    }

    /// ⟨t_{a1b1}⋯t_{aℓbℓ}, x⟩ = (-1)^{Σ_{i<j}[t_j][a_i]} [(ρ_1⊗…⊗ρ_ℓ)(x)]_{(a),(b)}.
    pub fn eval_word(&self, letters: &[CoordLetter], x: &Word) -> RatFunc {
        if letters.is_empty() {
            return uq::counit_word(x);
        }
        let n = self.ctx.size();
        let pattern: Vec<bool> = letters.iter().map(|l| l.barred).collect();
        let (mut row, mut col) = (0, 0);
        let mut sign = Parity::EVEN;
        for (i, l) in letters.iter().enumerate() {
            row = row * n + l.row - 1;
            col = col * n + l.col - 1;
            for later in &letters[i + 1..] {
                sign = sign + later.parity(&self.ctx) * self.ctx.parity(l.row);
            }
        }
        let v = self.image(&pattern, x).get(row, col);
        if sign.is_odd() {
            -v
        } else {
            v
        }
    }

    pub fn eval(&self, f: &GqElement, x: &Word) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (w, c) in f.terms() {
            let v = self.eval_word(w, x);
            if !v.is_zero() {
                acc = &acc + &(c * &v);
            }
        }
        acc
    }

    pub fn eval_expr(&self, f: &GqElement, x: &UqExpression) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (w, c) in x.terms() {
            let v = self.eval(f, w);
            if !v.is_zero() {
                acc = &acc + &(c * &v);
            }
        }
        acc
    }

    /// ⟨f⊗g, x⊗y⟩ = (-1)^{[g][x]} ⟨f, x⟩⟨g, y⟩.
    pub fn eval_tensor(&self, t: &GqTensor, x: &Word, y: &Word) -> RatFunc {
        let px = x.parity(&self.ctx);
        let mut acc = RatFunc::zero();
        for ((l, r), c) in t.terms() {
            let a = self.eval_word(l, x);
            if a.is_zero() {
                continue;
            }
            let b = self.eval_word(r, y);
            if b.is_zero() {
                continue;
            }
            let v = &(c * &a) * &b;
            acc = if (word_parity(&self.ctx, r) * px).is_odd() { &acc - &v } else { &acc + &v };
        }
        acc
    }
}

/// First probe on which two functionals differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub probe: String,
    pub lhs: RatFunc,
    pub rhs: RatFunc,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on {}: {} vs {}", self.probe, self.lhs, self.rhs)
    }
}

/// Compares two functionals on every probe, in probe order.
pub fn functional_equal_by(
    probes: &[Word],
    lhs: impl Fn(&Word) -> RatFunc + Sync,
    rhs: impl Fn(&Word) -> RatFunc + Sync,
) -> Result<(), Disagreement> {
    let bad = probes.par_iter().position_first(|x| lhs(x) != rhs(x));
    match bad {
        None => Ok(()),
        Some(i) => Err(Disagreement {
            probe: probes[i].to_string(),
            lhs: lhs(&probes[i]),
            rhs: rhs(&probes[i]),
        }),
    }
}

pub fn functional_equal(
    ev: &CoordEvaluator,
    f: &GqElement,
    g: &GqElement,
    probes: &[Word],
) -> Result<(), Disagreement> {
    let diff = f.sub(g);
    functional_equal_by(probes, |x| ev.eval(&diff, x), |_| RatFunc::zero()).map_err(|mut d| {
        let x = probes.iter().find(|p| p.to_string() == d.probe).expect("probe exists");
        d.lhs = ev.eval(f, x);
        d.rhs = ev.eval(g, x);
        d
    })
}

/// Compares two elements of G_q⊗G_q on all probe pairs.
pub fn tensor_functional_equal(
    ev: &CoordEvaluator,
    f: &GqTensor,
    g: &GqTensor,
    probes: &[Word],
) -> Result<(), Disagreement> {
    let diff = f.sub(g);
    let pairs: Vec<(Word, Word)> = probes
        .iter()
        .flat_map(|x| probes.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let bad = pairs
        .par_iter()
        .position_first(|(x, y)| !ev.eval_tensor(&diff, x, y).is_zero());
    match bad {
        None => Ok(()),
        Some(i) => {
            let (x, y) = &pairs[i];
            Err(Disagreement {
                probe: format!("{x} ⊗ {y}"),
                lhs: ev.eval_tensor(f, x, y),
                rhs: ev.eval_tensor(g, x, y),
            })
        }
    }
}

/// Matrix coefficient x ↦ ρ(x)_{ij} of a summand as a combination of
/// coordinate words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixCoefficient {
    pub highest_weight: Weight,
    pub row: usize,
    pub col: usize,
    pub element: GqElement,
}

fn multi_index(mut i: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = i % n + 1;
        i /= n;
    }
    out
}

/// Coordinates of all matrix elements of a summand of (𝔼 or 𝔼†)^{⊗k},
/// using the summand's embedding basis B and a left inverse P:
/// ρ_λ(x)_{ij} = Σ P_{ir} ρ(x)_{rs} B_{sj}.
pub fn matrix_coefficients(
    ctx: &GradingContext,
    summand: &Summand,
    barred: bool,
    k: usize,
) -> Vec<MatrixCoefficient> {
    let n = ctx.size();
    let dim = n.pow(k as u32);
    let d = summand.dim();
    let p = linalg::left_inverse(dim, &summand.basis).expect("summand basis is independent");
    let hw = summand.highest.weight.clone();
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut el = GqElement::zero();
            for &(r, ref pr) in p.row(i) {
                let rows = multi_index(r, n, k);
                for (s, bs) in summand.basis[j].iter().enumerate() {
                    if bs.is_zero() {
                        continue;
                    }
                    let cols = multi_index(s, n, k);
                    let letters: CoordWord = rows
                        .iter()
                        .zip(&cols)
                        .map(|(&a, &b)| CoordLetter { barred, row: a, col: b })
                        .collect();
                    let mut sign = Parity::EVEN;
                    for (x, l) in letters.iter().enumerate() {
                        for later in &letters[x + 1..] {
                            sign = sign + later.parity(ctx) * ctx.parity(l.row);
                        }
                    }
                    let c = pr * bs;
                    el.add_term(if sign.is_odd() { -c } else { c }, letters);
                }
            }
            out.push(MatrixCoefficient {
                highest_weight: hw.clone(),
                row: i,
                col: j,
                element: el,
            });
        }
    }
    out
}

/// Rank of a family of functionals restricted to the probes.
pub fn functional_rank(ev: &CoordEvaluator, elements: &[GqElement], probes: &[Word]) -> usize {
    let rows: Vec<Vector> = probes
        .par_iter()
        .map(|x| elements.iter().map(|f| ev.eval(f, x)).collect())
        .collect();
    linalg::rank(rows, elements.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::Generator;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn single_letters_are_matrix_entries() {
        let c = GradingContext::new(1, 1);
        let ev = CoordEvaluator::new(c);
        let k1 = Word(vec![Generator::K(1)]);
        let k2 = Word(vec![Generator::K(2)]);
        let two = GqElement::parse(&c, "t[1,1]*t[2,2]").unwrap();
        assert_eq!(ev.eval(&two, &k1), r("q"));
        assert_eq!(ev.eval(&GqElement::letter(CoordLetter::tb(2, 2)), &k2), r("q"));
        let e12 = Word(vec![Generator::Raise(1)]);
        assert_eq!(ev.eval(&GqElement::letter(CoordLetter::t(1, 2)), &e12), r("1"));
        assert_eq!(ev.eval(&GqElement::one(), &e12), r("0"));
    }

    #[test]
    fn coproduct_example() {
        let c = GradingContext::new(1, 1);
        let d = coproduct_letter(&c, CoordLetter::t(1, 2));
        let mut want = GqTensor::zero();
        want.add_term(r("1"), vec![CoordLetter::t(1, 1)], vec![CoordLetter::t(1, 2)]);
        want.add_term(r("1"), vec![CoordLetter::t(1, 2)], vec![CoordLetter::t(2, 2)]);
        assert_eq!(d, want);
    }

    #[test]
    fn antipode_examples() {
        let c = GradingContext::new(1, 1);
        assert_eq!(
            antipode_letter(&c, CoordLetter::t(1, 2)),
            GqElement::letter(CoordLetter::tb(2, 1))
        );
        assert_eq!(
            antipode_letter(&c, CoordLetter::tb(1, 2)),
            GqElement::parse(&c, "-t[2,1]").unwrap()
        );
    }

    #[test]
    fn parse_and_print_round_trip() {
        let c = GradingContext::new(2, 1);
        let f = GqElement::parse(&c, "q*t[1,2]*tb[3,3] - 2").unwrap();
        assert_eq!(GqElement::parse(&c, &f.to_string()).unwrap(), f);
        assert!(GqElement::parse(&c, "t[1,4]").is_err());
    }
}
