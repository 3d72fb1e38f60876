//! Parabolic subalgebras, the two translation actions of U_q on coordinate
//! functions, the induced modules spanned by Z^L and Z̄^L, Borel–Weil and
//! Frobenius reciprocity checks.
//!
//! The dot action is (x·f)(y) = (-1)^{[x][y]} f(S^{-1}(x) y) and the circle
//! action is (x∘f)(y) = f(y x). In coproduct form
//! x·f = Σ ⟨f_(1), S^{-1}(x)⟩ f_(2) and x∘f = Σ (-1)^{[x][f_(1)]} ⟨f_(2), x⟩ f_(1).

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use serde::Serialize;
use thiserror::Error;

use crate::coeff::RatFunc;
use crate::coords::{self, word_parity, CoordEvaluator, CoordLetter, GqElement};
use crate::graded::{GradedSpace, GradingContext, Parity, Weight};
use crate::linalg::{self, Vector};
use crate::report::Check;
use crate::reps::{self, RepError, Representation};
use crate::sparse::SparseMatrix;
use crate::superspace::{multi_indices, MultiIndex, Rewriter, SqElement, SqLetter};
use crate::uq::{self, alphabet, Generator, UqExpression, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InductionError {
    #[error("{0} is not a simple root index")]
    BadTheta(usize),
    #[error("action of {0} on {1} leaves the span: {2}")]
    LeavesSpan(Generator, String, String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParabolicSide {
    Plus,
    Minus,
}

/// Levi set 𝒮_l = {K_a^{±1}; E_{c,c+1}, E_{c+1,c} for c ∈ Θ}, extended by
/// the raising (plus) or lowering (minus) generators outside Θ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicSpec {
    pub theta: BTreeSet<usize>,
    pub side: ParabolicSide,
    pub levi: Vec<Generator>,
    pub generators: Vec<Generator>,
}

impl ParabolicSpec {
    pub fn contains(&self, g: Generator) -> bool {
        self.generators.contains(&g)
    }
}

pub fn parabolic_generators(
    ctx: &GradingContext,
    theta: &BTreeSet<usize>,
    side: ParabolicSide,
) -> Result<ParabolicSpec, InductionError> {
    if let Some(&c) = theta.iter().find(|c| !ctx.simple_indices().contains(*c)) {
        return Err(InductionError::BadTheta(c));
    }
    let mut levi: Vec<Generator> = ctx.indices().flat_map(|a| [Generator::K(a), Generator::Kinv(a)]).collect();
    levi.extend(theta.iter().map(|&c| Generator::Raise(c)));
    levi.extend(theta.iter().map(|&c| Generator::Lower(c)));
    let mut generators = levi.clone();
    for c in ctx.simple_indices().filter(|c| !theta.contains(c)) {
        generators.push(match side {
            ParabolicSide::Plus => Generator::Raise(c),
            ParabolicSide::Minus => Generator::Lower(c),
        });
    }
    Ok(ParabolicSpec {
        theta: theta.clone(),
        side,
        levi,
        generators,
    })
}

/// Θ = I′ ∖ {m+n−1}, the parabolic behind the superspace.
pub fn superspace_theta(ctx: &GradingContext) -> BTreeSet<usize> {
    ctx.simple_indices().filter(|&c| c + 1 != ctx.size()).collect()
}

fn pair_with(ev: &CoordEvaluator, letters: &[CoordLetter], x: &UqExpression) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (w, c) in x.terms() {
        let v = ev.eval_word(letters, w);
        if !v.is_zero() {
            acc = &acc + &(c * &v);
        }
    }
    acc
}

/// x·f through the coproduct of f.
pub fn dot_action(ev: &CoordEvaluator, x: &UqExpression, f: &GqElement) -> GqElement {
    let ctx = ev.ctx();
    let sx = uq::antipode_inverse_expr(ctx, x);
    let mut out = GqElement::zero();
    for ((left, right), c) in coords::coproduct(ctx, f).terms() {
        let v = pair_with(ev, left, &sx);
        if !v.is_zero() {
            out.add_term(c * &v, right.clone());
        }
    }
    out
}

/// x∘f through the coproduct of f; `x` must be parity homogeneous.
pub fn circle_action(ev: &CoordEvaluator, x: &UqExpression, f: &GqElement) -> GqElement {
    let ctx = ev.ctx();
    let px = x.parity(ctx).unwrap_or(Parity::EVEN);
    let mut out = GqElement::zero();
    for ((left, right), c) in coords::coproduct(ctx, f).terms() {
        let v = pair_with(ev, right, x);
        if !v.is_zero() {
            let s = RatFunc::from_int((px * word_parity(ctx, left)).sign() as i64);
            out.add_term(&(c * &v) * &s, left.clone());
        }
    }
    out
}

/// Which induced module: `Bar` is spanned by the Z^L, `Unbar` by the Z̄^L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InducedSide {
    Bar,
    Unbar,
}

impl InducedSide {
    pub const BOTH: [InducedSide; 2] = [InducedSide::Bar, InducedSide::Unbar];

    fn letters_barred(self) -> bool {
        self == InducedSide::Unbar
    }

    /// The parabolic under which the basis sections are circle-equivariant.
    pub fn parabolic_side(self) -> ParabolicSide {
        match self {
            InducedSide::Bar => ParabolicSide::Minus,
            InducedSide::Unbar => ParabolicSide::Plus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            InducedSide::Bar => "bar",
            InducedSide::Unbar => "unbar",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "bar" => Some(InducedSide::Bar),
            "unbar" => Some(InducedSide::Unbar),
            _ => None,
        }
    }
}

/// Σ_j C(m,j) C(n−1+k−j, k−j), the number of multi-indices of degree k.
pub fn induced_dimension(ctx: &GradingContext, k: u32) -> u64 {
    let (m, n, k) = (ctx.m as u64, ctx.n as u64, k as u64);
    (0..=m.min(k))
        .map(|j| binomial(m, j) * binomial(n - 1 + k - j, k - j))
        .sum()
}

/// Circle eigencharacter of the basis sections: K_N^{±1} act by
/// q_N^{±k} on Z^L and q_N^{∓k} on Z̄^L, the other K's by 1, E's by 0.
pub fn section_character(ctx: &GradingContext, k: u32, side: InducedSide, g: Generator) -> RatFunc {
    let n = ctx.size();
    let s = if side == InducedSide::Bar { 1 } else { -1 };
    match g {
        Generator::K(a) if a == n => ctx.q_a_pow(n, s * k as i32),
        Generator::Kinv(a) if a == n => ctx.q_a_pow(n, -s * k as i32),
        Generator::K(_) | Generator::Kinv(_) => RatFunc::one(),
        _ => RatFunc::zero(),
    }
}

/// The one-dimensional inducing character: p ↦ χ(S^{-1}(p)) for the
/// section character χ.
pub fn inducing_character(ctx: &GradingContext, k: u32, side: InducedSide, g: Generator) -> RatFunc {
    match g {
        Generator::K(a) => section_character(ctx, k, side, Generator::Kinv(a)),
        Generator::Kinv(a) => section_character(ctx, k, side, Generator::K(a)),
        _ => RatFunc::zero(),
    }
}

pub fn inducing_weight(ctx: &GradingContext, k: u32, side: InducedSide) -> Weight {
    let w = Weight::epsilon(ctx.size(), ctx.size());
    match side {
        InducedSide::Bar => w.scale(-(k as i64)),
        InducedSide::Unbar => w.scale(k as i64),
    }
}

#[derive(Clone, Debug)]
pub struct InducedModule {
    pub k: u32,
    pub side: InducedSide,
    pub basis: Vec<MultiIndex>,
    pub rep: Representation,
    pub parabolic: ParabolicSpec,
}

impl InducedModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn section(&self, ctx: &GradingContext, j: usize) -> GqElement {
        SqElement::word(self.basis[j].word(self.side.letters_barred())).to_coordinates(ctx)
    }
}

fn to_superspace(ctx: &GradingContext, f: &GqElement) -> Option<SqElement> {
    let mut out = SqElement::zero();
    for (w, c) in f.terms() {
        let word = w
            .iter()
            .map(|l| (l.col == ctx.size()).then_some(SqLetter { bar: l.barred, index: l.row }))
            .collect::<Option<Vec<_>>>()?;
        out.add_term(c.clone(), word);
    }
    Some(out)
}

/// Builds the induced module of degree k: the dot action on each basis
/// section, rewritten to normal form and read in the basis.
pub fn build_induced(
    ev: &CoordEvaluator,
    rw: &Rewriter,
    k: u32,
    side: InducedSide,
) -> Result<InducedModule, InductionError> {
    let ctx = *ev.ctx();
    let barred = side.letters_barred();
    let basis = multi_indices(&ctx, k);
    let index: BTreeMap<&MultiIndex, usize> = basis.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let parities: Vec<Parity> = basis
        .iter()
        .map(|l| l.word(barred).iter().map(|x| x.parity(&ctx)).sum())
        .collect();
    let space = GradedSpace::new(parities);
    let sections: Vec<GqElement> = basis
        .iter()
        .map(|l| SqElement::word(l.word(barred)).to_coordinates(&ctx))
        .collect();
    let empty = MultiIndex::zero(&ctx);
    let mut mats: BTreeMap<Generator, SparseMatrix> = BTreeMap::new();
    for g in alphabet(&ctx) {
        let x = UqExpression::generator(g);
        let mut triplets = Vec::new();
        for (j, f) in sections.iter().enumerate() {
            let image = dot_action(ev, &x, f);
            let name = || format!("Z{}{}", if barred { "b" } else { "" }, basis[j]);
            let sq = to_superspace(&ctx, &image)
                .ok_or_else(|| InductionError::LeavesSpan(g, name(), image.to_string()))?;
            let nf = rw.normal_form(&sq);
            for ((l, lb), c) in nf.terms() {
                let (key, rest) = if barred { (lb, l) } else { (l, lb) };
                match index.get(key) {
                    Some(&i) if *rest == empty => triplets.push((i, j, c.clone())),
                    _ => return Err(InductionError::LeavesSpan(g, name(), nf.to_string())),
                }
            }
        }
        mats.insert(g, SparseMatrix::from_triplets(basis.len(), basis.len(), triplets));
    }
    let rep = Representation::from_matrices(ctx, space, |g| mats[&g].clone())?;
    let parabolic = parabolic_generators(&ctx, &superspace_theta(&ctx), side.parabolic_side())?;
    Ok(InducedModule {
        k,
        side,
        basis,
        rep,
        parabolic,
    })
}

/// Every basis section satisfies f(y p) = χ(p) f(y) for p in the parabolic.
pub fn equivariance_checks(ev: &CoordEvaluator, module: &InducedModule, probes: &[Word]) -> Vec<Check> {
    let ctx = *ev.ctx();
    module
        .parabolic
        .generators
        .iter()
        .map(|&p| {
            let chi = section_character(&ctx, module.k, module.side, p);
            let pw = Word::from(p);
            let witness = (0..module.dim()).find_map(|j| {
                let f = module.section(&ctx, j);
                coords::functional_equal_by(probes, |y| ev.eval(&f, &y.concat(&pw)), |y| &chi * &ev.eval(&f, y))
                    .err()
                    .map(|d| format!("section {j}: {d}"))
            });
            Check::from_witness(format!("{} k={} equivariant under {p}", module.side.label(), module.k), witness)
        })
        .collect()
}

/// Σ_{i≤k} ε_i for k ≤ m, else Σ_{i≤m} ε_i + (k−m) ε_{m+1}.
pub fn skew_weight(ctx: &GradingContext, k: u32) -> Weight {
    let mut w = Weight::zero(ctx.size());
    let k = k as usize;
    for i in 0..k.min(ctx.m) {
        w.0[i] = 1;
    }
    if k > ctx.m && ctx.n > 0 {
        w.0[ctx.m] = (k - ctx.m) as i64;
    }
    w
}

/// Realized highest weights of the two modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelWeilOutcome {
    pub k: u32,
    pub bar_weight: Option<Weight>,
    pub unbar_weight: Option<Weight>,
    pub dims: (usize, usize),
}

/// Builds both modules of degree k and checks dimension, relations,
/// irreducibility, equivariance and the unordered highest-weight pair.
pub fn borel_weil_check(
    ev: &CoordEvaluator,
    rw: &Rewriter,
    k: u32,
    probes: &[Word],
) -> (Vec<Check>, BorelWeilOutcome) {
    let ctx = *ev.ctx();
    let mut checks = Vec::new();
    let mut weights = Vec::new();
    let mut dims = Vec::new();
    for side in InducedSide::BOTH {
        let label = format!("{} k={k}", side.label());
        let module = match build_induced(ev, rw, k, side) {
            Ok(m) => m,
            Err(e) => {
                checks.push(Check::fail(format!("{label} builds"), e.to_string()));
                weights.push(None);
                dims.push(0);
                continue;
            }
        };
        dims.push(module.dim());
        let expected = induced_dimension(&ctx, k);
        checks.push(Check::from_witness(
            format!("{label} dimension {expected}"),
            (module.dim() as u64 != expected).then(|| format!("built {}", module.dim())),
        ));
        let bad: Vec<String> = reps::check_relations(&module.rep)
            .into_iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.witness.unwrap_or_default()))
            .collect();
        checks.push(Check::from_witness(format!("{label} relations"), bad.first().cloned()));
        checks.extend(equivariance_checks(ev, &module, probes));
        match reps::decompose(&module.rep) {
            Ok(s) if s.len() == 1 && s[0].dim() == module.dim() => {
                checks.push(Check::pass(format!("{label} irreducible")));
                weights.push(Some(s[0].highest.weight.clone()));
            }
            Ok(s) => {
                let ds: Vec<usize> = s.iter().map(|x| x.dim()).collect();
                checks.push(Check::fail(format!("{label} irreducible"), format!("summand dims {ds:?}")));
                weights.push(s.first().map(|x| x.highest.weight.clone()));
            }
            Err(e) => {
                checks.push(Check::fail(format!("{label} irreducible"), e.to_string()));
                weights.push(None);
            }
        }
    }
    let expected: BTreeSet<Weight> = [skew_weight(&ctx, k), inducing_weight(&ctx, k, InducedSide::Bar)].into();
    let got: BTreeSet<Weight> = weights.iter().flatten().cloned().collect();
    checks.push(Check::from_witness(
        format!("k={k} highest-weight pair"),
        (got != expected || weights.iter().any(Option::is_none)).then(|| {
            let show = |s: &BTreeSet<Weight>| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            format!("got {{{}}}, expected {{{}}}", show(&got), show(&expected))
        }),
    ));
    let outcome = BorelWeilOutcome {
        k,
        bar_weight: weights[0].clone(),
        unbar_weight: weights[1].clone(),
        dims: (dims[0], dims[1]),
    };
    (checks, outcome)
}

/// Dimension of parity-homogeneous solutions Φ (even plus odd) of
/// Φ ρ_W(g) = (-1)^{[Φ][g]} ρ_M(g) Φ for all generators.
pub fn hom_dimension(w: &Representation, m: &Representation) -> usize {
    let ctx = *w.ctx();
    let (dw, dm) = (w.dim(), m.dim());
    let mut total = 0;
    for phi in [Parity::EVEN, Parity::ODD] {
        let unknowns: Vec<(usize, usize)> = (0..dm)
            .flat_map(|i| (0..dw).map(move |j| (i, j)))
            .filter(|&(i, j)| m.space().parity(i) + w.space().parity(j) == phi)
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        let pos: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut rows: Vec<Vector> = Vec::new();
        for g in alphabet(&ctx) {
            let rw = w.image(g).matrix();
            let rm = m.image(g).matrix();
            let s = RatFunc::from_int((phi * g.parity(&ctx)).sign() as i64);
            for i in 0..dm {
                for j in 0..dw {
                    let mut row = vec![RatFunc::zero(); unknowns.len()];
                    // (Φ ρ_W)_{ij} = Σ_r Φ_{ir} ρ_W(g)_{rj}
                    for r in 0..dw {
                        if let Some(&u) = pos.get(&(i, r)) {
                            let v = rw.get(r, j);
                            if !v.is_zero() {
                                row[u] = &row[u] + &v;
                            }
                        }
                    }
                    // (ρ_M Φ)_{ij} = Σ_r ρ_M(g)_{ir} Φ_{rj}
                    for &(r, ref v) in rm.row(i) {
                        if let Some(&u) = pos.get(&(r, j)) {
                            row[u] = &row[u] - &(&s * v);
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        total += unknowns.len() - linalg::rank(rows, unknowns.len());
    }
    total
}

/// Dimension of parity-homogeneous functionals φ: W → V (V one-dimensional,
/// even) with φ ρ_W(p) = χ(p) φ for p in the parabolic.
pub fn character_hom_dimension(
    w: &Representation,
    spec: &ParabolicSpec,
    chi: impl Fn(Generator) -> RatFunc,
) -> usize {
    let dw = w.dim();
    let mut total = 0;
    for phi in [Parity::EVEN, Parity::ODD] {
        let unknowns: Vec<usize> = (0..dw).filter(|&j| w.space().parity(j) == phi).collect();
        if unknowns.is_empty() {
            continue;
        }
        let mut rows: Vec<Vector> = Vec::new();
        for &g in &spec.generators {
            let m = w.image(g).matrix();
            let c = chi(g);
            for j in 0..dw {
                let mut row: Vector = unknowns.iter().map(|&r| m.get(r, j)).collect();
                if let Some(u) = unknowns.iter().position(|&r| r == j) {
                    row[u] = &row[u] - &c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        total += unknowns.len() - linalg::rank(rows, unknowns.len());
    }
    total
}

/// Both sides of Frobenius reciprocity for W against the degree-k module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusDims {
    pub label: String,
    pub k: u32,
    pub side: InducedSide,
    pub left: usize,
    pub right: usize,
}

pub fn frobenius_dims(w: &Representation, module: &InducedModule) -> (usize, usize) {
    let ctx = *w.ctx();
    let left = hom_dimension(w, &module.rep);
    let right = character_hom_dimension(w, &module.parabolic, |g| inducing_character(&ctx, module.k, module.side, g));
    (left, right)
}

/// The test modules: trivial, 𝔼, 𝔼† and the summands of 𝔼⊗𝔼 and 𝔼†⊗𝔼†.
pub fn frobenius_test_modules(ctx: &GradingContext) -> Result<Vec<(String, Representation)>, RepError> {
    let v = reps::vector_rep(ctx);
    let d = reps::dual_rep(&v);
    let mut out = vec![
        ("trivial".to_string(), reps::trivial_rep(ctx)),
        ("E".to_string(), v.clone()),
        ("Ed".to_string(), d.clone()),
    ];
    for (label, r) in [("E⊗E", &v), ("Ed⊗Ed", &d)] {
        for s in reps::decompose(&reps::tensor_rep(r, r)?)? {
            out.push((format!("{label} summand {}", s.highest.weight), s.rep));
        }
    }
    Ok(out)
}

pub fn frobenius_check(ev: &CoordEvaluator, rw: &Rewriter, max_k: u32) -> (Vec<Check>, Vec<FrobeniusDims>) {
    let ctx = *ev.ctx();
    let mut checks = Vec::new();
    let mut dims = Vec::new();
    let tests = match frobenius_test_modules(&ctx) {
        Ok(t) => t,
        Err(e) => return (vec![Check::fail("frobenius test modules", e.to_string())], dims),
    };
    for k in 0..=max_k {
        for side in InducedSide::BOTH {
            let module = match build_induced(ev, rw, k, side) {
                Ok(m) => m,
                Err(e) => {
                    checks.push(Check::fail(format!("{} k={k} builds", side.label()), e.to_string()));
                    continue;
                }
            };
            for (label, w) in &tests {
                let (left, right) = frobenius_dims(w, &module);
                checks.push(Check::from_witness(
                    format!("Hom({label}, {} k={k}) = {left}", side.label()),
                    (left != right).then(|| format!("induced side {left}, parabolic side {right}")),
                ));
                dims.push(FrobeniusDims {
                    label: label.clone(),
                    k,
                    side,
                    left,
                    right,
                });
            }
        }
    }
    (checks, dims)
}

/// x∘(y·f) = (-1)^{[x][y]} y·(x∘f) and the two action laws, on generator
/// pairs against each sample.
pub fn action_law_checks(ev: &CoordEvaluator, samples: &[GqElement], probes: &[Word]) -> Vec<Check> {
    let ctx = *ev.ctx();
    let gens = alphabet(&ctx);
    let mut out = Vec::new();
    for (si, f) in samples.iter().enumerate() {
        let mut commute = None;
        let mut dot_law = None;
        let mut circle_law = None;
        'outer: for &x in &gens {
            for &y in &gens {
                let (ex, ey) = (UqExpression::generator(x), UqExpression::generator(y));
                let s = RatFunc::from_int((x.parity(&ctx) * y.parity(&ctx)).sign() as i64);
                let a = circle_action(ev, &ex, &dot_action(ev, &ey, f));
                let b = dot_action(ev, &ey, &circle_action(ev, &ex, f)).scale(&s);
                if let Err(d) = coords::functional_equal(ev, &a, &b, probes) {
                    commute = Some(format!("x={x}, y={y}: {d}"));
                    break 'outer;
                }
                let xy = ex.mul(&ey);
                if dot_law.is_none() {
                    let l = dot_action(ev, &ex, &dot_action(ev, &ey, f));
                    let r = dot_action(ev, &xy, f);
                    dot_law = coords::functional_equal(ev, &l, &r, probes).err().map(|d| format!("x={x}, y={y}: {d}"));
                }
                if circle_law.is_none() {
                    let l = circle_action(ev, &ex, &circle_action(ev, &ey, f));
                    let r = circle_action(ev, &xy, f);
                    circle_law =
                        coords::functional_equal(ev, &l, &r, probes).err().map(|d| format!("x={x}, y={y}: {d}"));
                }
            }
        }
        out.push(Check::from_witness(format!("sample {si}: dot and circle graded-commute"), commute));
        out.push(Check::from_witness(format!("sample {si}: dot is a left action"), dot_law));
        out.push(Check::from_witness(format!("sample {si}: circle is a left action"), circle_law));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_formula_matches_enumeration() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let c = GradingContext::new(m, n);
            for k in 0..=4 {
                assert_eq!(induced_dimension(&c, k), multi_indices(&c, k).len() as u64);
            }
        }
        assert_eq!(induced_dimension(&GradingContext::new(2, 1), 2), 4);
    }

    #[test]
    fn parabolic_sets() {
        let c = GradingContext::new(2, 1);
        let all: BTreeSet<usize> = c.simple_indices().collect();
        let p = parabolic_generators(&c, &all, ParabolicSide::Plus).unwrap();
        assert_eq!(p.generators, p.levi);
        let b = parabolic_generators(&c, &BTreeSet::new(), ParabolicSide::Plus).unwrap();
        assert_eq!(b.generators.len(), 6 + 2);
        assert!(b.contains(Generator::Raise(2)) && !b.contains(Generator::Lower(1)));
        assert_eq!(superspace_theta(&c), [1].into());
        assert!(parabolic_generators(&c, &[3].into(), ParabolicSide::Minus).is_err());
    }

    #[test]
    fn single_letter_actions() {
        let c = GradingContext::new(1, 1);
        let ev = CoordEvaluator::new(c);
        let probes = uq::probe_monomials(&c, 2);
        for a in 1..=2 {
            let z = GqElement::letter(CoordLetter::t(a, 2));
            for b in 1..=2 {
                let kb = UqExpression::generator(Generator::K(b));
                let circle = z.scale(&c.q_a_pow(b, i32::from(b == 2)));
                assert!(coords::functional_equal(&ev, &circle_action(&ev, &kb, &z), &circle, &probes).is_ok());
                let dot = z.scale(&c.q_a_pow(b, -i32::from(a == b)));
                assert!(coords::functional_equal(&ev, &dot_action(&ev, &kb, &z), &dot, &probes).is_ok());
            }
        }
    }

    #[test]
    fn degree_zero_is_trivial() {
        let c = GradingContext::new(2, 1);
        let ev = CoordEvaluator::new(c);
        let rw = Rewriter::new(c);
        for side in InducedSide::BOTH {
            let m = build_induced(&ev, &rw, 0, side).unwrap();
            assert_eq!(m.dim(), 1);
            for g in alphabet(&c) {
                let want = if g.is_cartan() { RatFunc::one() } else { RatFunc::zero() };
                assert_eq!(m.rep.image(g).matrix().get(0, 0), want);
            }
        }
    }

    #[test]
    fn borel_weil_small() {
        let c = GradingContext::new(1, 1);
        let ev = CoordEvaluator::new(c);
        let rw = Rewriter::new(c);
        let probes = uq::probe_monomials(&c, 2);
        let (checks, out) = borel_weil_check(&ev, &rw, 2, &probes);
        assert!(checks.iter().all(Check::passed), "{checks:?}");
        assert_eq!(out.dims, (2, 2));
    }
}
