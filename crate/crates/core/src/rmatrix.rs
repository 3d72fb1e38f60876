//! The R-matrices on 𝔼⊗𝔼, 𝔼†⊗𝔼† and 𝔼†⊗𝔼, with the intertwining, braid
//! and RTT checks.
//!
//! The off-diagonal terms e_{ab}⊗e_{cd} are graded operators:
//! (e_{ab}⊗e_{cd})(v_i⊗v_j) = (-1)^{([c]+[d])[i]} e_{ab}v_i⊗e_{cd}v_j.

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{RatFunc, Rational};
use crate::coords::{CoordEvaluator, CoordLetter, GqElement};
use crate::graded::{graded_flip, koszul_kron, GradingContext, Parity};
use crate::linalg;
use crate::report::Check;
use crate::reps::{dual_rep, image_tensor, vector_rep, Representation};
use crate::sparse::SparseMatrix;
use crate::uq::{self, alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RKind {
    /// R on 𝔼⊗𝔼.
    VectorVector,
    /// R on 𝔼†⊗𝔼†.
    DualDual,
    /// R on 𝔼†⊗𝔼.
    DualVector,
}

impl RKind {
    pub const ALL: [RKind; 3] = [RKind::VectorVector, RKind::DualDual, RKind::DualVector];

    /// Whether the first and second tensor factors are duals.
    pub fn bars(self) -> (bool, bool) {
        match self {
            RKind::VectorVector => (false, false),
            RKind::DualDual => (true, true),
            RKind::DualVector => (true, false),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RKind::VectorVector => "pp",
            RKind::DualDual => "bb",
            RKind::DualVector => "mixed",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        RKind::ALL.into_iter().find(|k| k.label() == s)
    }
}

#[derive(Clone, Debug)]
pub struct RMatrix {
    pub kind: RKind,
    pub matrix: SparseMatrix,
}

fn unit(n: usize, a: usize, b: usize) -> SparseMatrix {
    SparseMatrix::from_triplets(n, n, [(a - 1, b - 1, RatFunc::one())])
}

fn graded_unit_tensor(ctx: &GradingContext, (a, b): (usize, usize), (c, d): (usize, usize)) -> SparseMatrix {
    let n = ctx.size();
    let p = ctx.parity(c) + ctx.parity(d);
    koszul_kron(&unit(n, a, b), &unit(n, c, d), p, &ctx.parities())
}

/// Builds the R-matrix of the given kind.
///
/// * 𝔼⊗𝔼: q^{Σ_a (-1)^{[a]} e_aa⊗e_aa} + (q − q^{-1}) Σ_{a<b} (-1)^{[b]} e_ab⊗e_ba
/// * 𝔼†⊗𝔼†: the same diagonal, with the sum over a > b
/// * 𝔼†⊗𝔼: q^{-Σ_a (-1)^{[a]} e_aa⊗e_aa} − (q − q^{-1}) Σ_{a<b} (-1)^{[a]+[b]+[a][b]} e_ba⊗e_ba
pub fn build_r_matrix(ctx: &GradingContext, kind: RKind) -> RMatrix {
    let n = ctx.size();
    let diag_sign = if kind == RKind::DualVector { -1 } else { 1 };
    let mut m = SparseMatrix::diagonal(
        (0..n * n)
            .map(|i| {
                let (a, b) = (i / n + 1, i % n + 1);
                if a == b {
                    RatFunc::q_pow(diag_sign * ctx.q_sign(a))
                } else {
                    RatFunc::one()
                }
            })
            .collect(),
    );
    let qq = RatFunc::q_minus_qinv();
    for a in ctx.indices() {
        for b in ctx.indices() {
            let term = match kind {
                RKind::VectorVector if a < b => {
                    let c = RatFunc::from_int(ctx.parity(b).sign() as i64);
                    Some((&qq * &c, graded_unit_tensor(ctx, (a, b), (b, a))))
                }
                RKind::DualDual if a > b => {
                    let c = RatFunc::from_int(ctx.parity(b).sign() as i64);
                    Some((&qq * &c, graded_unit_tensor(ctx, (a, b), (b, a))))
                }
                RKind::DualVector if a < b => {
                    let (pa, pb) = (ctx.parity(a), ctx.parity(b));
                    let c = RatFunc::from_int(-(pa + pb + pa * pb).sign() as i64);
                    Some((&qq * &c, graded_unit_tensor(ctx, (b, a), (b, a))))
                }
                _ => None,
            };
            if let Some((c, t)) = term {
                m = m.add(&t.scale(&c));
            }
        }
    }
    RMatrix { kind, matrix: m }
}

/// The two tensor factors of an R-matrix kind.
pub fn factors(ctx: &GradingContext, kind: RKind) -> (Representation, Representation) {
    let e = vector_rep(ctx);
    let d = dual_rep(&e);
    let pick = |barred: bool| if barred { d.clone() } else { e.clone() };
    let (b1, b2) = kind.bars();
    (pick(b1), pick(b2))
}

/// R (ρ1⊗ρ2)Δ(g) = (ρ1⊗ρ2)Δ'(g) R for every generator, with Δ' the graded
/// flip of Δ.
pub fn check_intertwiner(ctx: &GradingContext, r: &RMatrix) -> Vec<Check> {
    let (r1, r2) = factors(ctx, r.kind);
    let p12 = graded_flip(r1.space().parities(), r2.space().parities());
    let p21 = graded_flip(r2.space().parities(), r1.space().parities());
    alphabet(ctx)
        .into_par_iter()
        .map(|g| {
            let d = uq::coproduct(ctx, g);
            let lhs = r.matrix.mul(&image_tensor(&d, &[&r1, &r2]));
            let flipped = p21.mul(&image_tensor(&d, &[&r2, &r1])).mul(&p12);
            let rhs = flipped.mul(&r.matrix);
            let witness = lhs
                .sub(&rhs)
                .first_nonzero()
                .map(|(i, j, v)| format!("residual {v} at ({i},{j})"));
            Check::from_witness(format!("intertwiner {} {g}", r.kind.label()), witness)
        })
        .collect()
}

/// (Ř⊗1)(1⊗Ř)(Ř⊗1) = (1⊗Ř)(Ř⊗1)(1⊗Ř) with Ř = P∘R, P the graded flip.
/// Only meaningful when both factors coincide.
pub fn check_braid(ctx: &GradingContext, r: &RMatrix) -> Check {
    let name = format!("braid {} (derived Ř form)", r.kind.label());
    if r.kind == RKind::DualVector {
        return Check::fail(name, "the braid relation needs equal tensor factors");
    }
    let pv = ctx.parities();
    let n = ctx.size();
    let rc = graded_flip(&pv, &pv).mul(&r.matrix);
    let id = SparseMatrix::identity(n);
    let a = rc.kron(&id);
    let b = id.kron(&rc);
    let lhs = a.mul(&b).mul(&a);
    let rhs = b.mul(&a).mul(&b);
    Check::from_witness(
        name,
        lhs.sub(&rhs)
            .first_nonzero()
            .map(|(i, j, v)| format!("residual {v} at ({i},{j})")),
    )
}

/// Nonzero determinant and specialization to the identity at q = 1.
pub fn check_invertible(ctx: &GradingContext, r: &RMatrix) -> Vec<Check> {
    let det = linalg::determinant(&r.matrix.to_dense());
    let at_one = Rational::from_integer(1.into());
    let n = ctx.size() * ctx.size();
    let identity_at_one = r.matrix.entries().all(|(i, j, v)| {
        let want = if i == j { 1 } else { 0 };
        v.eval_at(&at_one).map(|x| x == Rational::from_integer(want.into())).unwrap_or(false)
    }) && (0..n).all(|i| !r.matrix.get(i, i).is_zero());
    vec![
        Check::from_witness(
            format!("invertible {}", r.kind.label()),
            det.is_zero().then(|| "determinant vanishes".to_string()),
        ),
        Check::from_witness(
            format!("identity at q=1 {}", r.kind.label()),
            (!identity_at_one).then(|| "R(q=1) differs from the identity".to_string()),
        ),
    ]
}

fn two_letter(sign: Parity, l1: CoordLetter, l2: CoordLetter) -> GqElement {
    GqElement::term(RatFunc::from_int(sign.sign() as i64), vec![l1, l2])
}

/// Entries of R t_1 t_2 and t_2 t_1 R as quadratic coordinate elements.
///
/// With ρ_1, ρ_2 the factors, (t_1 t_2)_{(ab),(cd)} is the functional
/// x ↦ [(ρ1⊗ρ2)Δ(x)]_{(ab),(cd)} and (t_2 t_1)_{(ab),(cd)} is
/// x ↦ [(ρ1⊗ρ2)Δ'(x)]_{(ab),(cd)}, both written through coordinate words.
pub fn rtt_sides(ctx: &GradingContext, r: &RMatrix) -> Vec<((usize, usize, usize, usize), GqElement, GqElement)> {
    let n = ctx.size();
    let (b1, b2) = r.kind.bars();
    let l1 = |a: usize, b: usize| CoordLetter { barred: b1, row: a, col: b };
    let l2 = |a: usize, b: usize| CoordLetter { barred: b2, row: a, col: b };
    let p = |a: usize| ctx.parity(a);
    let t12 = |e: usize, f: usize, c: usize, d: usize| {
        two_letter((p(f) + p(d)) * p(e), l1(e, c), l2(f, d))
    };
    let t21 = |a: usize, b: usize, e: usize, f: usize| {
        two_letter(p(a) * p(b) + p(e) * p(f) + (p(a) + p(e)) * p(b), l2(b, f), l1(a, e))
    };
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut out = Vec::new();
    for a in ctx.indices() {
        for b in ctx.indices() {
            for c in ctx.indices() {
                for d in ctx.indices() {
                    let mut lhs = GqElement::zero();
                    for &(col, ref v) in r.matrix.row(idx(a, b)) {
                        let (e, f) = (col / n + 1, col % n + 1);
                        lhs = lhs.add(&t12(e, f, c, d).scale(v));
                    }
                    let mut rhs = GqElement::zero();
                    for e in ctx.indices() {
                        for f in ctx.indices() {
                            let v = r.matrix.get(idx(e, f), idx(c, d));
                            if !v.is_zero() {
                                rhs = rhs.add(&t21(a, b, e, f).scale(&v));
                            }
                        }
                    }
                    out.push(((a, b, c, d), lhs, rhs));
                }
            }
        }
    }
    out
}

/// R_{12} t_1 t_2 = t_2 t_1 R_{12}, entry by entry, as functionals on the
/// probes.
pub fn check_rtt(ev: &CoordEvaluator, r: &RMatrix, probes: &[Word]) -> Check {
    let ctx = *ev.ctx();
    let sides = rtt_sides(&ctx, r);
    let diffs: Vec<GqElement> = sides.iter().map(|(_, l, r)| l.sub(r)).collect();
    let bad = probes.par_iter().find_map_first(|x| {
        diffs
            .iter()
            .position(|d| !ev.eval(d, x).is_zero())
            .map(|i| (x.clone(), i))
    });
    let witness = bad.map(|(x, i)| {
        let ((a, b, c, d), l, rr) = &sides[i];
        format!(
            "entry ({a}{b},{c}{d}) on {x}: {} vs {}",
            ev.eval(l, &x),
            ev.eval(rr, &x)
        )
    });
    Check::from_witness(format!("rtt {} ({} probes)", r.kind.label(), probes.len()), witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::probe_monomials;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn vector_vector_entries_at_11() {
        let c = GradingContext::new(1, 1);
        let rm = build_r_matrix(&c, RKind::VectorVector).matrix;
        assert_eq!(rm.get(0, 0), r("q"));
        assert_eq!(rm.get(3, 3), r("q^-1"));
        // R(v_2⊗v_1) = v_2⊗v_1 + (q − q^{-1}) v_1⊗v_2 under the graded reading.
        assert_eq!(rm.get(2, 2), r("1"));
        assert_eq!(rm.get(1, 2), r("q - q^-1"));
    }

    #[test]
    fn intertwiners_hold_at_11() {
        let c = GradingContext::new(1, 1);
        for kind in RKind::ALL {
            let rm = build_r_matrix(&c, kind);
            assert!(check_intertwiner(&c, &rm).iter().all(Check::passed), "{kind:?}");
        }
    }

    #[test]
    fn rtt_at_the_unit_is_r() {
        let c = GradingContext::new(1, 1);
        let ev = CoordEvaluator::new(c);
        let rm = build_r_matrix(&c, RKind::VectorVector);
        let one = Word::empty();
        for ((a, b, cc, d), l, _) in rtt_sides(&c, &rm) {
            let i = (a - 1) * 2 + b - 1;
            let j = (cc - 1) * 2 + d - 1;
            assert_eq!(ev.eval(&l, &one), rm.matrix.get(i, j));
        }
        assert!(check_rtt(&ev, &rm, &probe_monomials(&c, 2)).passed());
    }
}
