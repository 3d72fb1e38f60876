//! Algebraic invariants as property tests.

use proptest::prelude::*;
use qsuper::coeff::{LaurentPoly, RatFunc, Rational};
use qsuper::coords::{self, CoordEvaluator, GqElement};
use qsuper::graded::{koszul_kron, GradingContext};
use qsuper::induction;
use qsuper::reps;
use qsuper::superspace::{RewriteStats, Rewriter, SqElement, SqLetter, SqWord, Strategy as RwStrategy};
use qsuper::uq::{self, alphabet, Generator, UqExpression, Word};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Rational::from_integer(c.into()))))
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFunc::from_laurent(n)
        } else {
            RatFunc::new(n, d).expect("nonzero denominator")
        }
    })
}

fn generator(ctx: GradingContext) -> impl Strategy<Value = Generator> {
    let alpha = alphabet(&ctx);
    (0..alpha.len()).prop_map(move |i| alpha[i])
}

fn word(ctx: GradingContext, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(generator(ctx), 0..=max).prop_map(Word)
}

fn sq_word(ctx: GradingContext, max: usize) -> impl Strategy<Value = SqWord> {
    let n = ctx.size();
    prop::collection::vec((any::<bool>(), 1..=n), 0..=max)
        .prop_map(|ls| ls.into_iter().map(|(bar, i)| if bar { SqLetter::zb(i) } else { SqLetter::z(i) }).collect())
}

fn sq_element(ctx: GradingContext) -> impl Strategy<Value = SqElement> {
    prop::collection::vec((-3i64..=3, -2i32..=2, sq_word(ctx, 4)), 1..4).prop_map(|ts| {
        let mut e = SqElement::zero();
        for (c, p, w) in ts {
            e.add_term(&RatFunc::from_int(c) * &RatFunc::q_pow(p), w);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RatFunc::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn coefficient_print_parse(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in laurent(), b in laurent()) {
        let q0 = Rational::new(3.into(), 2.into());
        let (fa, fb) = (RatFunc::from_laurent(a), RatFunc::from_laurent(b));
        let prod = (&fa * &fb).eval_at(&q0).unwrap();
        prop_assert_eq!(prod, fa.eval_at(&q0).unwrap() * fb.eval_at(&q0).unwrap());
        let sum = (&fa + &fb).eval_at(&q0).unwrap();
        prop_assert_eq!(sum, fa.eval_at(&q0).unwrap() + fb.eval_at(&q0).unwrap());
    }

    /// (f⊗g)(h⊗k) = (-1)^{[g][h]} fh⊗gk for homogeneous maps on 𝔼.
    #[test]
    fn koszul_interchange(
        f in generator(GradingContext::new(2, 1)),
        g in generator(GradingContext::new(2, 1)),
        h in generator(GradingContext::new(2, 1)),
        k in generator(GradingContext::new(2, 1)),
    ) {
        let ctx = GradingContext::new(2, 1);
        let v = reps::vector_rep(&ctx);
        let dom = ctx.parities();
        let m = |x: Generator| v.image(x).matrix().clone();
        let (pg, ph, pk) = (g.parity(&ctx), h.parity(&ctx), k.parity(&ctx));
        let lhs = koszul_kron(&m(f), &m(g), pg, &dom).mul(&koszul_kron(&m(h), &m(k), pk, &dom));
        let mut rhs = koszul_kron(&m(f).mul(&m(h)), &m(g).mul(&m(k)), pg + pk, &dom);
        if (pg * ph).is_odd() {
            rhs = rhs.neg();
        }
        prop_assert_eq!(lhs, rhs);
    }

    /// Δ is multiplicative on 𝔼⊗𝔼† and S is an anti-homomorphism on 𝔼.
    #[test]
    fn hopf_maps_respect_products(x in word(GradingContext::new(2, 1), 3), y in word(GradingContext::new(2, 1), 3)) {
        let ctx = GradingContext::new(2, 1);
        let v = reps::vector_rep(&ctx);
        let d = reps::dual_rep(&v);
        let img = |w: &Word| reps::image_tensor(&uq::coproduct_word(&ctx, w), &[&v, &d]);
        prop_assert_eq!(img(&x.concat(&y)), img(&x).mul(&img(&y)));
        let s = |w: &Word| v.image_expr(&uq::antipode_word(&ctx, w));
        let mut rhs = s(&y).mul(&s(&x));
        if (x.parity(&ctx) * y.parity(&ctx)).is_odd() {
            rhs = rhs.neg();
        }
        prop_assert_eq!(s(&x.concat(&y)), rhs);
    }

    #[test]
    fn rewriting_is_confluent_and_decreasing(w in sq_word(GradingContext::new(2, 1), 6), seed in any::<u64>()) {
        let rw = Rewriter::new(GradingContext::new(2, 1));
        let e = SqElement::word(w);
        let mut stats = RewriteStats::default();
        let left = rw.normalize_with(&e, RwStrategy::Leftmost, &mut stats);
        let right = rw.normalize_with(&e, RwStrategy::Rightmost, &mut stats);
        let random = rw.normalize_with(&e, RwStrategy::Random(seed), &mut stats);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &random);
        prop_assert!(stats.violations.is_empty(), "{:?}", stats.violations);
    }

    #[test]
    fn rewriting_is_multiplicative(a in sq_element(GradingContext::new(1, 2)), b in sq_element(GradingContext::new(1, 2))) {
        let rw = Rewriter::new(GradingContext::new(1, 2));
        let direct = rw.normal_form(&a.mul(&b));
        let staged = rw.normal_form(&rw.normalize(&a).mul(&rw.normalize(&b)));
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn normal_form_print_parse(e in sq_element(GradingContext::new(2, 1))) {
        let rw = Rewriter::new(GradingContext::new(2, 1));
        let nf = rw.normal_form(&e);
        prop_assert_eq!(rw.parse_normal_form(&nf.to_string()).unwrap(), nf);
    }
}

fn samples(ctx: &GradingContext) -> Vec<GqElement> {
    let n = ctx.size();
    ["z[1]", &format!("zb[{n}]"), &format!("z[1]*zb[{n}]"), &format!("z[{n}]*z[1]")]
        .iter()
        .map(|s| SqElement::parse(ctx, s).unwrap().to_coordinates(ctx))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// x·(y·f) = (xy)·f and x∘(y∘f) = (xy)∘f.
    #[test]
    fn translation_actions_are_left_actions(
        x in generator(GradingContext::new(1, 1)),
        y in generator(GradingContext::new(1, 1)),
        i in 0usize..4,
    ) {
        let ctx = GradingContext::new(1, 1);
        let ev = CoordEvaluator::new(ctx);
        let probes = uq::probe_monomials(&ctx, 2);
        let f = &samples(&ctx)[i];
        let (ex, ey) = (UqExpression::generator(x), UqExpression::generator(y));
        let xy = ex.mul(&ey);
        let nested = induction::dot_action(&ev, &ex, &induction::dot_action(&ev, &ey, f));
        let once = induction::dot_action(&ev, &xy, f);
        prop_assert!(coords::functional_equal(&ev, &nested, &once, &probes).is_ok());
        let nested = induction::circle_action(&ev, &ex, &induction::circle_action(&ev, &ey, f));
        let once = induction::circle_action(&ev, &xy, f);
        prop_assert!(coords::functional_equal(&ev, &nested, &once, &probes).is_ok());
    }
}
