//! Verification suites assembled into reports. Each function backs one CLI
//! subcommand and is also called directly by the acceptance tests.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeff::{RatFunc, Rational};
use crate::coords::{self, CoordEvaluator, CoordLetter, GqElement};
use crate::expr::ParseError;
use crate::graded::{GradingContext, Weight};
use crate::induction::{self, InducedSide};
use crate::report::{Check, Report};
use crate::reps::{self, Representation, SesquilinearForm, WeightClassifier};
use crate::rmatrix::{self, RKind};
use crate::sparse::SparseMatrix;
use crate::superspace::{self, Rewriter, SqElement};
use crate::uq::{self, alphabet, UqExpression, Word};

/// Probe degree used when none is given: 4 for (1,1), 3 otherwise.
pub fn default_probe_degree(ctx: &GradingContext) -> usize {
    if (ctx.m, ctx.n) == (1, 1) {
        4
    } else {
        3
    }
}

pub fn default_q0() -> Rational {
    Rational::new(3.into(), 2.into())
}

fn base_report(suite: &str, ctx: &GradingContext) -> Report {
    Report::new(suite).param("m", ctx.m).param("n", ctx.n)
}

fn prefixed(prefix: &str, checks: Vec<Check>) -> Vec<Check> {
    checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}: {}", c.name);
            c
        })
        .collect()
}

fn matrix_witness(m: &SparseMatrix) -> Option<String> {
    m.first_nonzero().map(|(i, j, v)| format!("residual {v} at ({i},{j})"))
}

/// The modules on which the defining relations are evaluated.
pub fn relation_modules(ctx: &GradingContext) -> Vec<(String, Representation)> {
    let v = reps::vector_rep(ctx);
    let d = reps::dual_rep(&v);
    vec![
        ("E".into(), v.clone()),
        ("Ed".into(), d.clone()),
        ("E⊗E".into(), reps::tensor_all(ctx, &[&v, &v])),
        ("E⊗E⊗E".into(), reps::tensor_all(ctx, &[&v, &v, &v])),
        ("E⊗Ed".into(), reps::tensor_all(ctx, &[&v, &d])),
        ("Ed⊗Ed".into(), reps::tensor_all(ctx, &[&d, &d])),
    ]
}

pub fn relation_checks(ctx: &GradingContext) -> Vec<Check> {
    relation_modules(ctx)
        .par_iter()
        .map(|(label, r)| prefixed(&format!("relations in {label}"), reps::check_relations(r)))
        .collect::<Vec<_>>()
        .concat()
}

/// Co-associativity in 𝔼^{⊗3}; counit and antipode axioms in 𝔼.
pub fn hopf_checks(ctx: &GradingContext) -> Vec<Check> {
    let v = reps::vector_rep(ctx);
    let mut out = Vec::new();
    for g in alphabet(ctx) {
        let d = uq::coproduct(ctx, g);
        let left = reps::image_tensor(&d.expand_leg(0, ctx), &[&v, &v, &v]);
        let right = reps::image_tensor(&d.expand_leg(1, ctx), &[&v, &v, &v]);
        out.push(Check::from_witness(format!("coassociative {g}"), matrix_witness(&left.sub(&right))));

        let n = v.dim();
        let unit = SparseMatrix::identity(n).scale(&uq::counit(g));
        let (mut s_left, mut s_right, mut e_left) = (SparseMatrix::zeros(n, n), SparseMatrix::zeros(n, n), SparseMatrix::zeros(n, n));
        for (legs, c) in d.terms() {
            let (a, b) = (&legs[0], &legs[1]);
            let sa = v.image_expr(&uq::antipode_word(ctx, a));
            let sb = v.image_expr(&uq::antipode_word(ctx, b));
            s_left = s_left.add(&sa.mul(&v.image_word(b)).scale(c));
            s_right = s_right.add(&v.image_word(a).mul(&sb).scale(c));
            e_left = e_left.add(&v.image_word(b).scale(&(c * &uq::counit_word(a))));
        }
        out.push(Check::from_witness(format!("antipode m(S⊗1)Δ {g}"), matrix_witness(&s_left.sub(&unit))));
        out.push(Check::from_witness(format!("antipode m(1⊗S)Δ {g}"), matrix_witness(&s_right.sub(&unit))));
        out.push(Check::from_witness(format!("counit (ε⊗1)Δ {g}"), matrix_witness(&e_left.sub(v.image(g).matrix()))));
    }
    out
}

/// S²(x) = K_{2ρ} x K_{2ρ}^{-1} in 𝔼.
pub fn square_antipode_checks(ctx: &GradingContext) -> Vec<Check> {
    let v = reps::vector_rep(ctx);
    let k = v.image_word(&uq::k2rho(ctx));
    let kinv = v.image_word(&uq::k2rho_inverse(ctx));
    let mut out: Vec<Check> = alphabet(ctx)
        .into_iter()
        .map(|g| {
            let s2 = uq::antipode_expr(ctx, &uq::antipode(ctx, g));
            let lhs = v.image_expr(&s2);
            let rhs = k.mul(v.image(g).matrix()).mul(&kinv);
            Check::from_witness(format!("S² = Ad K2ρ on {g}"), matrix_witness(&lhs.sub(&rhs)))
        })
        .collect();
    let inv = alphabet(ctx).into_iter().find_map(|g| {
        let x = UqExpression::generator(g);
        let a = v.image_expr(&uq::antipode_expr(ctx, &uq::antipode_inverse_expr(ctx, &x)));
        let b = v.image_expr(&uq::antipode_inverse_expr(ctx, &uq::antipode_expr(ctx, &x)));
        let id = v.image(g).matrix();
        matrix_witness(&a.sub(id)).or(matrix_witness(&b.sub(id))).map(|w| format!("{g}: {w}"))
    });
    out.push(Check::from_witness("S S^{-1} = S^{-1} S = id", inv));
    out
}

/// ** = id and S*S* = id on generators in 𝔼 for both star types;
/// K2ρ* = K2ρ.
pub fn star_checks(ctx: &GradingContext) -> Vec<Check> {
    let v = reps::vector_rep(ctx);
    let mut out = Vec::new();
    for theta in [1u8, 2] {
        let mut involution = None;
        let mut ss = None;
        for g in alphabet(ctx) {
            let x = UqExpression::generator(g);
            let st = |e: &UqExpression| uq::star_expr(ctx, e, theta).expect("valid star type");
            let twice = v.image_expr(&st(&st(&x)));
            if involution.is_none() {
                involution = matrix_witness(&twice.sub(v.image(g).matrix())).map(|w| format!("{g}: {w}"));
            }
            let y = uq::antipode_expr(ctx, &st(&uq::antipode_expr(ctx, &st(&x))));
            if ss.is_none() {
                ss = matrix_witness(&v.image_expr(&y).sub(v.image(g).matrix())).map(|w| format!("{g}: {w}"));
            }
        }
        out.push(Check::from_witness(format!("star type {theta} involutive"), involution));
        out.push(Check::from_witness(format!("star type {theta} S*S* = id"), ss));
        let k = UqExpression::word(uq::k2rho(ctx));
        let ks = uq::star_expr(ctx, &k, theta).expect("valid star type");
        let only_k = ks.terms().all(|(w, _)| w.letters().iter().all(|g| g.is_cartan()));
        let same = v.image_expr(&ks).sub(&v.image_expr(&k));
        out.push(Check::from_witness(
            format!("star type {theta} fixes K2ρ"),
            if only_k { matrix_witness(&same) } else { Some("star of K2ρ leaves the Cartan part".into()) },
        ));
    }
    out
}

/// Adjointness and positivity for 𝔼 and 𝔼⊗𝔼 (type 1) and 𝔼† (type 2).
pub fn unitarity_checks(ctx: &GradingContext, q0: &Rational) -> (Vec<Check>, BTreeMap<String, Value>) {
    let v = reps::vector_rep(ctx);
    let d = reps::dual_rep(&v);
    let form = SesquilinearForm::vector(ctx);
    let mut out = prefixed("E", reps::unitarity_check(&v, &form, q0));
    let mut data = BTreeMap::new();
    match form.tensor(&form) {
        Ok(f2) => out.extend(prefixed("E⊗E", reps::unitarity_check(&reps::tensor_rep(&v, &v).expect("same context"), &f2, q0))),
        Err(e) => out.push(Check::fail("E⊗E form", e.to_string())),
    }
    match form.dual(&v) {
        Ok(fd) => {
            out.extend(prefixed("Ed", reps::unitarity_check(&d, &fd, q0)));
            data.insert(format!("gram Ed at q0={q0}"), gram_value(&fd.gram, q0));
        }
        Err(e) => out.push(Check::fail("Ed form", e.to_string())),
    }
    data.insert(format!("gram E at q0={q0}"), gram_value(&form.gram, q0));
    (out, data)
}

fn gram_value(g: &SparseMatrix, q0: &Rational) -> Value {
    match g.specialize(q0) {
        Ok(rows) => Value::Array(
            rows.iter()
                .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        ),
        Err(e) => Value::String(e.to_string()),
    }
}

/// ⟨Δ(t), x⊗y⟩ = ⟨t, xy⟩ for every letter and probe pair.
pub fn pairing_checks(ev: &CoordEvaluator, probes: &[Word]) -> Vec<Check> {
    let ctx = *ev.ctx();
    letters(&ctx)
        .into_par_iter()
        .map(|l| {
            let f = GqElement::letter(l);
            let d = coords::coproduct(&ctx, &f);
            let bad = probes.iter().find_map(|x| {
                probes.iter().find_map(|y| {
                    let a = ev.eval_tensor(&d, x, y);
                    let b = ev.eval(&f, &x.concat(y));
                    (a != b).then(|| format!("on {x} ⊗ {y}: {a} vs {b}"))
                })
            });
            Check::from_witness(format!("bialgebra pairing {l}"), bad)
        })
        .collect()
}

fn letters(ctx: &GradingContext) -> Vec<CoordLetter> {
    let mut out = Vec::new();
    for barred in [false, true] {
        for a in ctx.indices() {
            for b in ctx.indices() {
                out.push(CoordLetter { barred, row: a, col: b });
            }
        }
    }
    out
}

/// Relations, Hopf axioms, S², star structure, bialgebra pairing and
/// unitarity at q0.
pub fn verify_report(ctx: &GradingContext, probe_degree: usize, q0: &Rational) -> Report {
    let mut r = base_report("verify", ctx)
        .param("probe_degree", probe_degree)
        .param("q0", q0.to_string());
    r.extend(relation_checks(ctx));
    r.extend(hopf_checks(ctx));
    r.extend(square_antipode_checks(ctx));
    r.extend(star_checks(ctx));
    let ev = CoordEvaluator::new(*ctx);
    let probes = uq::probe_monomials(ctx, probe_degree.min(2));
    r.extend(pairing_checks(&ev, &probes));
    let (checks, data) = unitarity_checks(ctx, q0);
    r.extend(checks);
    r.data.extend(data);
    r
}

/// Factor sequence for `decompose`: tokens `E` and `Ed` joined by `*` or `,`.
pub fn parse_factor_word(src: &str) -> Result<Vec<bool>, ParseError> {
    src.split(['*', ','])
        .enumerate()
        .map(|(i, t)| match t.trim() {
            "E" => Ok(false),
            "Ed" => Ok(true),
            other => Err(ParseError::new(i, format!("unknown module '{other}', expected E or Ed"))),
        })
        .collect()
}

/// Decomposes (word)^{⊗power} into irreducibles and classifies the highest
/// weights.
pub fn decompose_report(ctx: &GradingContext, word: &[bool], power: usize) -> Report {
    let label: Vec<&str> = word.iter().map(|&b| if b { "Ed" } else { "E" }).collect();
    let mut r = base_report("decompose", ctx)
        .param("word", label.join("*"))
        .param("power", power);
    let v = reps::vector_rep(ctx);
    let d = reps::dual_rep(&v);
    let factors: Vec<&Representation> = (0..power)
        .flat_map(|_| word.iter().map(|&b| if b { &d } else { &v }))
        .collect();
    if factors.is_empty() {
        r.extend([Check::fail("module", "empty tensor product")]);
        return r;
    }
    let module = reps::tensor_all(ctx, &factors);
    r.extend(prefixed("relations", reps::check_relations(&module)));
    let summands = match reps::decompose(&module) {
        Ok(s) => s,
        Err(e) => {
            r.extend([Check::fail("decomposition", e.to_string())]);
            return r;
        }
    };
    let total: usize = summands.iter().map(|s| s.dim()).sum();
    r.extend([Check::from_witness(
        format!("summand dimensions sum to {}", module.dim()),
        (total != module.dim()).then(|| format!("sum is {total}")),
    )]);
    let all_e = word.iter().all(|b| !b);
    let all_d = word.iter().all(|&b| b);
    let classifier = WeightClassifier::new(*ctx, factors.len().min(3));
    let mut rows = Vec::new();
    for s in &summands {
        let hw = &s.highest.weight;
        let irreducible = reps::highest_weight_vectors(&s.rep).map(|h| h.len());
        r.extend([Check::from_witness(
            format!("summand {hw} has one highest-weight vector"),
            match irreducible {
                Ok(1) => None,
                Ok(k) => Some(format!("{k} highest-weight vectors")),
                Err(e) => Some(e.to_string()),
            },
        )]);
        let class = classifier.classify(hw);
        if all_e {
            r.extend([Check::from_witness(
                format!("summand {hw} in Λ1"),
                match &class {
                    Ok(c) if c.in_lambda1 => None,
                    Ok(_) => Some("not a Λ1 weight".into()),
                    Err(e) => Some(e.to_string()),
                },
            )]);
        }
        if all_d {
            r.extend([Check::from_witness(
                format!("summand {hw} in Λ2"),
                match &class {
                    Ok(c) if c.in_lambda2 => None,
                    Ok(_) => Some("not a Λ2 weight".into()),
                    Err(e) => Some(e.to_string()),
                },
            )]);
        }
        rows.push(json!({
            "highest_weight": hw.to_string(),
            "dim": s.dim(),
            "lowest_weight": s.highest.lowest_weight.as_ref().map(ToString::to_string),
            "dagger": s.highest.dagger().map(|w| w.to_string()),
            "lambda1": class.as_ref().ok().map(|c| c.in_lambda1),
            "lambda2": class.as_ref().ok().map(|c| c.in_lambda2),
        }));
    }
    r.data.insert("dim".into(), json!(module.dim()));
    r.data.insert("summands".into(), Value::Array(rows));
    r
}

/// Intertwining, braid (equal factors only), invertibility and RTT.
pub fn rmatrix_report(ctx: &GradingContext, kind: RKind, probe_degree: usize) -> Report {
    let mut r = base_report("rmatrix", ctx)
        .param("kind", kind.label())
        .param("probe_degree", probe_degree);
    let rm = rmatrix::build_r_matrix(ctx, kind);
    r.extend(rmatrix::check_intertwiner(ctx, &rm));
    if kind != RKind::DualVector {
        r.extend([rmatrix::check_braid(ctx, &rm)]);
    }
    r.extend(rmatrix::check_invertible(ctx, &rm));
    let ev = CoordEvaluator::new(*ctx);
    let probes = uq::probe_monomials(ctx, probe_degree);
    r.extend([rmatrix::check_rtt(&ev, &rm, &probes)]);
    r.data.insert("probes".into(), json!(probes.len()));
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordCheck {
    Antipode,
    Star,
    PeterWeyl,
}

impl CoordCheck {
    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "antipode" => Some(CoordCheck::Antipode),
            "star" => Some(CoordCheck::Star),
            "peterweyl" => Some(CoordCheck::PeterWeyl),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CoordCheck::Antipode => "antipode",
            CoordCheck::Star => "star",
            CoordCheck::PeterWeyl => "peterweyl",
        }
    }
}

/// S(f)(x) = f(S(x)) for letters and two-letter words, the antipode axiom on
/// letters, and S(t̄_12) = −t_21 at (1,1).
pub fn antipode_checks(ev: &CoordEvaluator, probes: &[Word]) -> Vec<Check> {
    let ctx = *ev.ctx();
    let ls = letters(&ctx);
    let mut samples: Vec<GqElement> = ls.iter().map(|&l| GqElement::letter(l)).collect();
    for &a in &ls {
        for &b in &ls {
            if a.row <= b.row && (a.barred as u8) <= (b.barred as u8) {
                samples.push(GqElement::term(RatFunc::one(), vec![a, b]));
            }
        }
    }
    let mut out: Vec<Check> = samples
        .par_iter()
        .map(|f| {
            let s = coords::antipode(&ctx, f);
            let r = coords::functional_equal_by(
                probes,
                |x| ev.eval(&s, x),
                |x| ev.eval_expr(f, &uq::antipode_word(&ctx, x)),
            );
            Check::from_witness(format!("S({f}) = f∘S"), r.err().map(|d| d.to_string()))
        })
        .collect();
    for &l in &ls {
        let f = GqElement::letter(l);
        let mut m = GqElement::zero();
        for ((a, b), c) in coords::coproduct(&ctx, &f).terms() {
            let sa = coords::antipode(&ctx, &GqElement::term(c.clone(), a.clone()));
            m = m.add(&sa.mul(&GqElement::term(RatFunc::one(), b.clone())));
        }
        let unit = GqElement::one().scale(&coords::counit(&f));
        let r = coords::functional_equal(ev, &m, &unit, probes);
        out.push(Check::from_witness(format!("m(S⊗1)Δ({l}) = ε"), r.err().map(|d| d.to_string())));
    }
    if (ctx.m, ctx.n) == (1, 1) {
        let s = coords::antipode(&ctx, &GqElement::letter(CoordLetter::tb(1, 2)));
        let want = GqElement::term(RatFunc::from_int(-1), vec![CoordLetter::t(2, 1)]);
        out.push(Check::from_witness(
            "S(tb[1,2]) = -t[2,1]",
            (s != want).then(|| format!("got {s}")),
        ));
    }
    out
}

/// ∗∗ = id, ∗Δ = Δ∗, S∗S∗ = id and ε∘∗ = ε on coordinates, for both
/// parities of θ.
pub fn coordinate_star_checks(ev: &CoordEvaluator, probes: &[Word]) -> Vec<Check> {
    let ctx = *ev.ctx();
    let pair_probes: Vec<Word> = probes.iter().filter(|p| p.len() <= 2).cloned().collect();
    let mut out = Vec::new();
    for theta_odd in [false, true] {
        let th = if theta_odd { "odd" } else { "even" };
        let ls = letters(&ctx);
        let results: Vec<[Option<String>; 4]> = ls
            .par_iter()
            .map(|&l| {
                let f = GqElement::letter(l);
                let g = GqElement::term(RatFunc::one(), vec![l, CoordLetter { barred: !l.barred, ..l }]);
                let st = |e: &GqElement| coords::star(&ctx, e, theta_odd);
                let inv = [&f, &g]
                    .iter()
                    .find(|e| st(&st(e)) != ***e)
                    .map(|e| format!("** moves {e}"));
                let lhs = coords::coproduct(&ctx, &st(&f));
                let rhs = coords::star_tensor(&ctx, &coords::coproduct(&ctx, &f), theta_odd);
                let delta = coords::tensor_functional_equal(ev, &lhs, &rhs, &pair_probes)
                    .err()
                    .map(|d| format!("{l}: {d}"));
                let ss = st(&coords::antipode(&ctx, &st(&coords::antipode(&ctx, &f))));
                let ss = coords::functional_equal(ev, &ss, &f, probes).err().map(|d| format!("{l}: {d}"));
                let counit = (coords::counit(&st(&f)) != coords::counit(&f)).then(|| format!("{l}"));
                [inv, delta, ss, counit]
            })
            .collect();
        let names = ["** = id", "*Δ = Δ*", "S*S* = id", "ε∘* = ε"];
        for (k, name) in names.iter().enumerate() {
            let w = results.iter().find_map(|r| r[k].clone());
            out.push(Check::from_witness(format!("θ {th}: {name}"), w));
        }
    }
    out
}

/// Matrix coefficients of the summands of 𝔼^{⊗k} and 𝔼†^{⊗k}, k ≤ 2:
/// agreement with the module matrices and joint linear independence; and
/// the separation probe on sample elements.
pub fn peter_weyl_checks(ev: &CoordEvaluator, probes: &[Word]) -> (Vec<Check>, BTreeMap<String, Value>) {
    let ctx = *ev.ctx();
    let v = reps::vector_rep(&ctx);
    let d = reps::dual_rep(&v);
    let mut out = Vec::new();
    let mut data = BTreeMap::new();
    for barred in [false, true] {
        let base = if barred { &d } else { &v };
        let label = if barred { "Ed" } else { "E" };
        let mut all = Vec::new();
        for k in 1..=2 {
            let module = reps::tensor_power(base, k);
            let summands = match reps::decompose(&module) {
                Ok(s) => s,
                Err(e) => {
                    out.push(Check::fail(format!("{label}^{k} decomposes"), e.to_string()));
                    continue;
                }
            };
            for s in &summands {
                let coeffs = coords::matrix_coefficients(&ctx, s, barred, k);
                let bad = coeffs.par_iter().find_map_first(|c| {
                    coords::functional_equal_by(
                        probes,
                        |x| ev.eval(&c.element, x),
                        |x| s.rep.image_word(x).get(c.row, c.col),
                    )
                    .err()
                    .map(|d| format!("({},{}): {d}", c.row, c.col))
                });
                out.push(Check::from_witness(
                    format!("{label}^{k} summand {} coefficients match", s.highest.weight),
                    bad,
                ));
                all.extend(coeffs.into_iter().map(|c| c.element));
            }
        }
        let rank = coords::functional_rank(ev, &all, probes);
        out.push(Check::from_witness(
            format!("{label} matrix coefficients independent ({})", all.len()),
            (rank != all.len()).then(|| format!("rank {rank}")),
        ));
        data.insert(format!("{label} coefficient count"), json!(all.len()));
    }
    out.push(separation_check(ev));
    (out, data)
}

/// Samples of degree ≤ 3 in U_q, each detected by some coordinate word of
/// length ≤ 3.
pub fn separation_samples(ctx: &GradingContext) -> Vec<UqExpression> {
    let probes = uq::probe_monomials(ctx, 3);
    let mut out: Vec<UqExpression> = probes.iter().take(20).cloned().map(UqExpression::word).collect();
    let step = (probes.len() / 8).max(1);
    for (i, w) in probes.iter().step_by(step).enumerate().take(8) {
        let other = &probes[(i * 7 + 3) % probes.len()];
        let mut e = UqExpression::word(w.clone());
        e.add_term(RatFunc::q_pow(i as i32 + 1), other.clone());
        if !e.is_zero() {
            out.push(e);
        }
    }
    out
}

fn coordinate_words(ctx: &GradingContext, max_len: usize) -> Vec<Vec<CoordLetter>> {
    let ls = letters(ctx);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<CoordLetter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                ls.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn separation_check(ev: &CoordEvaluator) -> Check {
    let ctx = *ev.ctx();
    let samples = separation_samples(&ctx);
    let words = coordinate_words(&ctx, 3);
    let missed = samples.par_iter().find_map_first(|x| {
        let hit = std::iter::once(Vec::new())
            .chain(words.iter().cloned())
            .any(|w| !ev.eval_expr(&GqElement::term(RatFunc::one(), w), x).is_zero());
        (!hit).then(|| x.to_string())
    });
    Check::from_witness(
        format!("separation on {} samples", samples.len()),
        missed.map(|x| format!("no coordinate word of length ≤ 3 detects {x}")),
    )
}

/// Word length of the probes used for rank and independence checks.
pub const INDEPENDENCE_DEGREE: usize = 4;

/// Probes for independence checks: every word of length ≤ 4, then E words
/// up to length 2(m+n−1), which a weight-zero product t_{1,N} t̄_{1,N}
/// needs to be seen at all.
pub fn independence_probes(ctx: &GradingContext) -> Vec<Word> {
    let mut words = uq::all_words(ctx, INDEPENDENCE_DEGREE);
    words.extend(uq::root_words(ctx, INDEPENDENCE_DEGREE + 1..=2 * (ctx.size() - 1)));
    words
}

pub fn coords_report(ctx: &GradingContext, check: CoordCheck, probe_degree: usize) -> Report {
    let mut r = base_report("coords", ctx)
        .param("check", check.label())
        .param("probe_degree", probe_degree);
    let ev = CoordEvaluator::new(*ctx);
    let probes = uq::probe_monomials(ctx, probe_degree);
    match check {
        CoordCheck::Antipode => {
            r.extend(antipode_checks(&ev, &probes));
            r.extend(pairing_checks(&ev, &uq::probe_monomials(ctx, probe_degree.min(2))));
        }
        CoordCheck::Star => r.extend(coordinate_star_checks(&ev, &probes)),
        CoordCheck::PeterWeyl => {
            // Ordered simple-generator monomials miss composite root
            // orderings, so independence is tested on all words.
            let words = independence_probes(ctx);
            let (checks, data) = peter_weyl_checks(&ev, &words);
            r.data.insert("independence probes".into(), json!(words.len()));
            r.extend(checks);
            r.data.extend(data);
        }
    }
    r.data.insert("probes".into(), json!(probes.len()));
    r
}

/// Rewrites an expression and checks that the printed form parses back to
/// the same normal form.
pub fn normalform_report(ctx: &GradingContext, src: &str) -> Result<Report, ParseError> {
    let rw = Rewriter::new(*ctx);
    let nf = rw.parse_normal_form(src)?;
    let mut r = base_report("normalform", ctx).param("expr", src);
    let printed = nf.to_string();
    let back = rw.parse_normal_form(&printed);
    r.extend([Check::from_witness(
        "printed form parses back",
        match back {
            Ok(b) if b == nf => None,
            Ok(b) => Some(format!("reparsed as {b}")),
            Err(e) => Some(e.to_string()),
        },
    )]);
    r.data.insert("normal_form".into(), json!(printed));
    r.data.insert(
        "gl1_weight".into(),
        superspace::gl1_weight(&nf).map(|w| json!(w)).unwrap_or(Value::Null),
    );
    Ok(r)
}

/// Confluence corpus: all words of length ≤ 5 at (1,1), otherwise 200
/// random words of length ≤ 6.
pub fn confluence_corpus(ctx: &GradingContext) -> Vec<superspace::SqWord> {
    if (ctx.m, ctx.n) == (1, 1) {
        superspace::all_words(ctx, 5)
    } else {
        superspace::random_words(ctx, 200, 6, 11)
    }
}

/// The rewriting and superspace identity suite, plus the projective
/// subalgebra ranks in degrees 0 and 1.
pub fn identities_report(ctx: &GradingContext, probe_degree: usize) -> Report {
    let mut r = base_report("identities", ctx).param("probe_degree", probe_degree);
    let rw = Rewriter::new(*ctx);
    let ev = CoordEvaluator::new(*ctx);
    let probes = uq::probe_monomials(ctx, probe_degree);
    let suite = superspace::verify_identities(&rw, &ev, &probes, &confluence_corpus(ctx), 60);
    r.extend(suite.checks);
    r.data.insert("rule applications".into(), json!(suite.stats.applications));
    r.data.insert("pattern rule rhs".into(), json!(rw.normal_form(rw.pattern_rhs()).to_string()));
    let words = independence_probes(ctx);
    let mut cp = Vec::new();
    for d in 0..=1 {
        let b = superspace::cp_basis(&ev, d, &words);
        let (normal, normal_rank) = superspace::normal_monomial_rank(&ev, d, &words);
        cp.push(json!({
            "degree": d,
            "monomials": b.monomials.iter().map(|(l, lb)| format!("Z{l} Zb{lb}")).collect::<Vec<_>>(),
            "rank": b.rank,
            "normal_monomials": normal,
            "normal_rank": normal_rank,
        }));
        r.extend([Check::from_witness(
            format!("normal monomials of bidegree ({d},{d}) independent"),
            (normal != normal_rank).then(|| format!("rank {normal_rank} of {normal}")),
        )]);
    }
    r.data.insert("cp".into(), Value::Array(cp));
    r
}

/// Builds the induced module of degree k on one side, checks the
/// Borel–Weil statement for degree k and Frobenius reciprocity against it.
pub fn induce_report(ctx: &GradingContext, k: u32, side: InducedSide, probe_degree: usize) -> Report {
    let mut r = base_report("induce", ctx)
        .param("k", k)
        .param("side", side.label())
        .param("probe_degree", probe_degree);
    let ev = CoordEvaluator::new(*ctx);
    let rw = Rewriter::new(*ctx);
    let probes = uq::probe_monomials(ctx, probe_degree.min(2));
    let module = match induction::build_induced(&ev, &rw, k, side) {
        Ok(m) => m,
        Err(e) => {
            r.extend([Check::fail("module builds", e.to_string())]);
            return r;
        }
    };
    let (checks, outcome) = induction::borel_weil_check(&ev, &rw, k, &probes);
    r.extend(checks);
    r.extend(induction::action_law_checks(&ev, &action_samples(ctx), &probes));
    match induction::frobenius_test_modules(ctx) {
        Ok(tests) => {
            let mut rows = Vec::new();
            for (label, w) in &tests {
                let (left, right) = induction::frobenius_dims(w, &module);
                r.extend([Check::from_witness(
                    format!("Frobenius Hom({label}, {} k={k}) = {left}", side.label()),
                    (left != right).then(|| format!("induced side {left}, parabolic side {right}")),
                )]);
                rows.push(json!({"module": label, "hom_induced": left, "hom_parabolic": right}));
            }
            r.data.insert("frobenius".into(), Value::Array(rows));
        }
        Err(e) => r.extend([Check::fail("Frobenius test modules", e.to_string())]),
    }
    let weight = |w: &Option<Weight>| w.as_ref().map(ToString::to_string);
    r.data.insert("dim".into(), json!(module.dim()));
    r.data.insert(
        "basis".into(),
        json!(module.basis.iter().map(ToString::to_string).collect::<Vec<_>>()),
    );
    r.data.insert("highest_weight_bar".into(), json!(weight(&outcome.bar_weight)));
    r.data.insert("highest_weight_unbar".into(), json!(weight(&outcome.unbar_weight)));
    r.data.insert(
        "parabolic".into(),
        json!({
            "side": module.parabolic.side,
            "theta": module.parabolic.theta,
            "generators": module.parabolic.generators,
        }),
    );
    r
}

/// Superspace elements used as samples for the action laws.
pub fn action_samples(ctx: &GradingContext) -> Vec<GqElement> {
    let n = ctx.size();
    let words = [
        SqElement::parse(ctx, &format!("z[1]*zb[{n}]")),
        SqElement::parse(ctx, &format!("z[{n}]*z[1]")),
    ];
    words
        .into_iter()
        .filter_map(Result::ok)
        .map(|e| e.to_coordinates(ctx))
        .chain([GqElement::term(
            RatFunc::one(),
            vec![CoordLetter::t(1, n), CoordLetter::tb(n, 1)],
        )])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_words() {
        assert_eq!(parse_factor_word("E*Ed").unwrap(), vec![false, true]);
        assert!(parse_factor_word("E*X").is_err());
    }

    #[test]
    fn normalform_example() {
        let c = GradingContext::new(1, 1);
        let r = normalform_report(&c, "zb[1]*z[1]").unwrap();
        assert_eq!(r.data["normal_form"], json!("-q^2 * Z[1;0] Zb[1;0]"));
        assert!(r.passed);
    }
}
