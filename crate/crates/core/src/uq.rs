//! Symbolic elements of U_q(gl(m|n)): words in the generators, the
//! defining relations, Hopf structure maps, star operations, K_{2ρ},
//! composite root vectors and probe monomials.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::RatFunc;
use crate::expr::{self, ExprAlgebra, ParseError};
use crate::graded::{two_rho, GradingContext, Parity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UqError {
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("E[{0},{1}] is a generator or not a root vector; composite vectors need |a-b| >= 2")]
    NotComposite(usize, usize),
    #[error("star type must be 1 or 2, got {0}")]
    BadStarType(u8),
}

/// Chevalley-type generator. `Raise(a)` is E_{a,a+1} and `Lower(a)` is
/// E_{a+1,a}; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    K(usize),
    Kinv(usize),
    Raise(usize),
    Lower(usize),
}

impl Generator {
    pub fn parity(&self, ctx: &GradingContext) -> Parity {
        match *self {
            Generator::Raise(a) | Generator::Lower(a) => Parity(a == ctx.m),
            _ => Parity::EVEN,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, Generator::K(_) | Generator::Kinv(_))
    }

    pub fn validate(&self, ctx: &GradingContext) -> Result<(), UqError> {
        match *self {
            Generator::K(a) | Generator::Kinv(a) if (1..=ctx.size()).contains(&a) => Ok(()),
            Generator::Raise(a) | Generator::Lower(a) if (1..ctx.size()).contains(&a) => Ok(()),
            Generator::K(a) | Generator::Kinv(a) | Generator::Raise(a) | Generator::Lower(a) => {
                Err(UqError::IndexOutOfRange(a))
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::K(a) => write!(f, "K[{a}]"),
            Generator::Kinv(a) => write!(f, "Kinv[{a}]"),
            Generator::Raise(a) => write!(f, "E[{},{}]", a, a + 1),
            Generator::Lower(a) => write!(f, "E[{},{}]", a + 1, a),
        }
    }
}

impl serde::Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All generators of U_q(gl(m|n)) in probe order: K_1, K_1^{-1}, K_2, ...,
/// then raising E_{12}, E_{23}, ..., then lowering E_{21}, E_{32}, ....
pub fn alphabet(ctx: &GradingContext) -> Vec<Generator> {
    let mut out = Vec::new();
    for a in ctx.indices() {
        out.push(Generator::K(a));
        out.push(Generator::Kinv(a));
    }
    out.extend(ctx.simple_indices().map(Generator::Raise));
    out.extend(ctx.simple_indices().map(Generator::Lower));
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self, ctx: &GradingContext) -> Parity {
        self.0.iter().map(|g| g.parity(ctx)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Self {
        Word(vec![g])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Generator::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Q(q)-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqExpression {
    terms: BTreeMap<Word, RatFunc>,
}

impl UqExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(RatFunc::one(), Word::empty())
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(c, w);
        e
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(Word::from(g))
    }

    pub fn from_terms<I: IntoIterator<Item = (RatFunc, Word)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (c, w) in iter {
            e.add_term(c, w);
        }
        e
    }

    pub fn add_term(&mut self, c: RatFunc, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
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
        let mut e = self.clone();
        for (w, c) in &other.terms {
            e.add_term(c.clone(), w.clone());
        }
        e
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (x * c, w.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                e.add_term(c1 * c2, w1.concat(w2));
            }
        }
        e
    }

    /// Common parity of all terms, or `None` for inhomogeneous expressions.
    pub fn parity(&self, ctx: &GradingContext) -> Option<Parity> {
        let mut it = self.terms.keys().map(|w| w.parity(ctx));
        let first = it.next().unwrap_or(Parity::EVEN);
        it.all(|p| p == first).then_some(first)
    }

    /// Applies a linear map defined on words.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> UqExpression) -> UqExpression {
        let mut out = UqExpression::zero();
        for (w, c) in &self.terms {
            out = out.add(&f(w).scale(c));
        }
        out
    }

    pub fn parse(ctx: &GradingContext, src: &str) -> Result<Self, ParseError> {
        expr::evaluate(&expr::parse(src)?, &UqParser { ctx: *ctx })
    }
}

impl fmt::Display for UqExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.to_string()
                } else {
                    format!("({c})*{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

struct UqParser {
    ctx: GradingContext,
}

impl ExprAlgebra for UqParser {
    type Elem = UqExpression;
    fn scalar(&self, c: RatFunc) -> UqExpression {
        UqExpression::term(c, Word::empty())
    }
    fn symbol(&self, name: &str, groups: &[Vec<i64>], pos: usize) -> Result<UqExpression, ParseError> {
        let g = match name {
            "K" | "Kinv" => {
                let a = expr::indices(groups, pos, 1)?[0];
                if name == "K" {
                    Generator::K(a)
                } else {
                    Generator::Kinv(a)
                }
            }
            "E" => {
                let ix = expr::indices(groups, pos, 2)?;
                let (a, b) = (ix[0], ix[1]);
                if b == a + 1 {
                    Generator::Raise(a)
                } else if a == b + 1 {
                    Generator::Lower(b)
                } else {
                    return Err(ParseError::new(pos, "E[a,b] needs |a-b| = 1"));
                }
            }
            _ => return Err(ParseError::new(pos, format!("unknown symbol '{name}'"))),
        };
        g.validate(&self.ctx)
            .map_err(|e| ParseError::new(pos, e.to_string()))?;
        Ok(UqExpression::generator(g))
    }
    fn add(&self, a: &UqExpression, b: &UqExpression) -> UqExpression {
        a.add(b)
    }
    fn neg(&self, a: &UqExpression) -> UqExpression {
        a.scale(&RatFunc::from_int(-1))
    }
    fn mul(&self, a: &UqExpression, b: &UqExpression) -> UqExpression {
        a.mul(b)
    }
    fn as_scalar(&self, a: &UqExpression) -> Option<RatFunc> {
        if a.is_zero() {
            return Some(RatFunc::zero());
        }
        match a.terms.iter().next() {
            Some((w, c)) if a.len() == 1 && w.is_empty() => Some(c.clone()),
            _ => None,
        }
    }
}

/// Element of the ℓ-fold tensor power of U_q: combination of word tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpression {
    arity: usize,
    terms: BTreeMap<Vec<Word>, RatFunc>,
}

impl TensorExpression {
    pub fn zero(arity: usize) -> Self {
        TensorExpression {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(RatFunc::one(), vec![Word::empty(); arity]);
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, c: RatFunc, legs: Vec<Word>) {
        assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for (l, c) in &other.terms {
            t.add_term(c.clone(), l.clone());
        }
        t
    }

    /// Product with the Koszul sign: moving b_j past a_i (i > j) costs
    /// (-1)^{[a_i][b_j]}.
    pub fn mul(&self, other: &Self, ctx: &GradingContext) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (a, ca) in &self.terms {
            let pa: Vec<Parity> = a.iter().map(|w| w.parity(ctx)).collect();
            for (b, cb) in &other.terms {
                let mut sign = Parity::EVEN;
                let mut prefix = Parity::EVEN;
                for i in 0..self.arity {
                    sign = sign + pa[i] * prefix;
                    prefix = prefix + b[i].parity(ctx);
                }
                let legs: Vec<Word> = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                let c = ca * cb;
                out.add_term(if sign.is_odd() { -c } else { c }, legs);
            }
        }
        out
    }

    /// Applies Δ to one leg, raising the arity by one.
    pub fn expand_leg(&self, leg: usize, ctx: &GradingContext) -> Self {
        let mut out = Self::zero(self.arity + 1);
        for (legs, c) in &self.terms {
            let d = coproduct_word(ctx, &legs[leg]);
            for (pair, cd) in &d.terms {
                let mut nl = legs[..leg].to_vec();
                nl.extend(pair.iter().cloned());
                nl.extend(legs[leg + 1..].iter().cloned());
                out.add_term(c * cd, nl);
            }
        }
        out
    }
}

fn k_ratio(a: usize, forward: bool) -> Word {
    // K_a K_{a+1}^{-1} when forward, K_a^{-1} K_{a+1} otherwise.
    if forward {
        Word(vec![Generator::K(a), Generator::Kinv(a + 1)])
    } else {
        Word(vec![Generator::Kinv(a), Generator::K(a + 1)])
    }
}

pub fn coproduct(_ctx: &GradingContext, g: Generator) -> TensorExpression {
    let mut t = TensorExpression::zero(2);
    let one = RatFunc::one();
    match g {
        Generator::K(_) | Generator::Kinv(_) => t.add_term(one, vec![g.into(), g.into()]),
        Generator::Raise(a) => {
            t.add_term(one.clone(), vec![g.into(), k_ratio(a, true)]);
            t.add_term(one, vec![Word::empty(), g.into()]);
        }
        Generator::Lower(a) => {
            t.add_term(one.clone(), vec![g.into(), Word::empty()]);
            t.add_term(one, vec![k_ratio(a, false), g.into()]);
        }
    }
    t
}

pub fn coproduct_word(ctx: &GradingContext, w: &Word) -> TensorExpression {
    w.0.iter()
        .fold(TensorExpression::one(2), |acc, &g| acc.mul(&coproduct(ctx, g), ctx))
}

pub fn coproduct_expr(ctx: &GradingContext, x: &UqExpression) -> TensorExpression {
    let mut out = TensorExpression::zero(2);
    for (w, c) in x.terms() {
        for (legs, cd) in coproduct_word(ctx, w).terms() {
            out.add_term(c * cd, legs.clone());
        }
    }
    out
}

pub fn counit(g: Generator) -> RatFunc {
    if g.is_cartan() {
        RatFunc::one()
    } else {
        RatFunc::zero()
    }
}

pub fn counit_word(w: &Word) -> RatFunc {
    if w.0.iter().all(Generator::is_cartan) {
        RatFunc::one()
    } else {
        RatFunc::zero()
    }
}

pub fn antipode(_ctx: &GradingContext, g: Generator) -> UqExpression {
    let minus = RatFunc::from_int(-1);
    match g {
        Generator::K(a) => UqExpression::generator(Generator::Kinv(a)),
        Generator::Kinv(a) => UqExpression::generator(Generator::K(a)),
        Generator::Raise(a) => UqExpression::term(minus, Word::from(g).concat(&k_ratio(a, false))),
        Generator::Lower(a) => UqExpression::term(minus, k_ratio(a, true).concat(&Word::from(g))),
    }
}

/// S on a word: graded anti-automorphism, S(xy) = (-1)^{[x][y]} S(y) S(x).
pub fn antipode_word(ctx: &GradingContext, w: &Word) -> UqExpression {
    let mut sign = Parity::EVEN;
    let mut seen = Parity::EVEN;
    for g in &w.0 {
        let p = g.parity(ctx);
        sign = sign + seen * p;
        seen = seen + p;
    }
    let mut out = UqExpression::one();
    for &g in w.0.iter().rev() {
        out = out.mul(&antipode(ctx, g));
    }
    out.scale(&RatFunc::from_int(i64::from(sign.sign())))
}

pub fn antipode_expr(ctx: &GradingContext, x: &UqExpression) -> UqExpression {
    x.map_words(|w| antipode_word(ctx, w))
}

/// Exponents e_a with K_{2ρ} = Π_a K_a^{e_a}.
pub fn k2rho_exponents(ctx: &GradingContext) -> Vec<i64> {
    // Expanding Π_{a<b} (K_a K_b^{-1})^{(-1)^{[a]+[b]}} gives the same
    // exponents as the ε-coordinates of 2ρ.
    two_rho(ctx).0
}

fn k_power_word(exps: &[i64]) -> Word {
    let mut v = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        let g = if e >= 0 { Generator::K(i + 1) } else { Generator::Kinv(i + 1) };
        v.extend(std::iter::repeat_n(g, e.unsigned_abs() as usize));
    }
    Word(v)
}

/// K_{2ρ} as a word in the K_a^{±1}.
pub fn k2rho(ctx: &GradingContext) -> Word {
    k_power_word(&k2rho_exponents(ctx))
}

pub fn k2rho_inverse(ctx: &GradingContext) -> Word {
    let e: Vec<i64> = k2rho_exponents(ctx).iter().map(|x| -x).collect();
    k_power_word(&e)
}

/// S^{-1}(x) = K_{2ρ}^{-1} S(x) K_{2ρ}.
pub fn antipode_inverse_expr(ctx: &GradingContext, x: &UqExpression) -> UqExpression {
    UqExpression::word(k2rho_inverse(ctx))
        .mul(&antipode_expr(ctx, x))
        .mul(&UqExpression::word(k2rho(ctx)))
}

pub fn antipode_inverse(ctx: &GradingContext, g: Generator) -> UqExpression {
    antipode_inverse_expr(ctx, &UqExpression::generator(g))
}

/// Star operation of type θ ∈ {1, 2} on a generator.
pub fn star(ctx: &GradingContext, g: Generator, theta: u8) -> Result<UqExpression, UqError> {
    if theta != 1 && theta != 2 {
        return Err(UqError::BadStarType(theta));
    }
    let sign = |a: usize| {
        if (theta + 1) % 2 == 1 && a == ctx.m {
            RatFunc::from_int(-1)
        } else {
            RatFunc::one()
        }
    };
    Ok(match g {
        Generator::K(_) | Generator::Kinv(_) => UqExpression::generator(g),
        Generator::Raise(a) => UqExpression::term(
            sign(a),
            Word::from(Generator::Lower(a)).concat(&k_ratio(a, true)),
        ),
        Generator::Lower(a) => UqExpression::term(
            sign(a),
            k_ratio(a, false).concat(&Word::from(Generator::Raise(a))),
        ),
    })
}

/// Star on a word: antilinear anti-automorphism; coefficients are real.
pub fn star_word(ctx: &GradingContext, w: &Word, theta: u8) -> Result<UqExpression, UqError> {
    let mut out = UqExpression::one();
    for &g in w.0.iter().rev() {
        out = out.mul(&star(ctx, g, theta)?);
    }
    Ok(out)
}

pub fn star_expr(ctx: &GradingContext, x: &UqExpression, theta: u8) -> Result<UqExpression, UqError> {
    let mut out = UqExpression::zero();
    for (w, c) in x.terms() {
        out = out.add(&star_word(ctx, w, theta)?.scale(c));
    }
    Ok(out)
}

/// *'(a) = (-1)^{[a]} a*.
pub fn star_prime(ctx: &GradingContext, g: Generator, theta: u8) -> Result<UqExpression, UqError> {
    let s = star(ctx, g, theta)?;
    Ok(s.scale(&RatFunc::from_int(i64::from(g.parity(ctx).sign()))))
}

/// Composite root vector E_{ab}, |a-b| >= 2, with intermediate index
/// c = min(a,b) + 1.
pub fn composite_root_vector(ctx: &GradingContext, a: usize, b: usize) -> Result<UqExpression, UqError> {
    for x in [a, b] {
        if x < 1 || x > ctx.size() {
            return Err(UqError::IndexOutOfRange(x));
        }
    }
    if a.abs_diff(b) < 2 {
        return Err(UqError::NotComposite(a, b));
    }
    Ok(root_vector(ctx, a, b))
}

/// E_{ab} for any a ≠ b: a generator when adjacent, composite otherwise.
pub fn root_vector(ctx: &GradingContext, a: usize, b: usize) -> UqExpression {
    if b == a + 1 {
        return UqExpression::generator(Generator::Raise(a));
    }
    if a == b + 1 {
        return UqExpression::generator(Generator::Lower(b));
    }
    let c = a.min(b) + 1;
    let (left, right) = (root_vector(ctx, a, c), root_vector(ctx, c, b));
    let coeff = if a < b { ctx.q_a_pow(c, -1) } else { ctx.q_a_pow(c, 1) };
    left.mul(&right).sub(&right.mul(&left).scale(&coeff))
}

/// A relation `expr = 0` with a descriptive name.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub expr: UqExpression,
}

fn gen(g: Generator) -> UqExpression {
    UqExpression::generator(g)
}

fn super_bracket(ctx: &GradingContext, x: &UqExpression, y: &UqExpression) -> UqExpression {
    let px = x.parity(ctx).unwrap_or_default();
    let py = y.parity(ctx).unwrap_or_default();
    let s = RatFunc::from_int(i64::from((px * py).sign()));
    x.mul(y).sub(&y.mul(x).scale(&s))
}

fn serre(x: &UqExpression, y: &UqExpression) -> UqExpression {
    let xx = x.mul(x);
    let qq = RatFunc::q() + RatFunc::q_pow(-1);
    xx.mul(y)
        .sub(&x.mul(y).mul(x).scale(&qq))
        .add(&y.mul(&xx))
}

/// Every relation of the defining presentation, as expressions equal to 0.
pub fn defining_relations(ctx: &GradingContext) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |name: String, expr: UqExpression| out.push(Relation { name, expr });
    let one = UqExpression::one();
    let size = ctx.size();
    for a in ctx.indices() {
        push(format!("K[{a}]*Kinv[{a}] = 1"), gen(Generator::K(a)).mul(&gen(Generator::Kinv(a))).sub(&one));
        push(format!("Kinv[{a}]*K[{a}] = 1"), gen(Generator::Kinv(a)).mul(&gen(Generator::K(a))).sub(&one));
    }
    for a in ctx.indices() {
        for b in a + 1..=size {
            for ga in [Generator::K(a), Generator::Kinv(a)] {
                for gb in [Generator::K(b), Generator::Kinv(b)] {
                    push(format!("[{ga}, {gb}] = 0"), super_bracket(ctx, &gen(ga), &gen(gb)));
                }
            }
        }
    }
    for a in ctx.indices() {
        for b in ctx.simple_indices() {
            // K_a E_{b,b+1} K_a^{-1} = q_a^{δ_ab - δ_{a,b+1}} E_{b,b+1}
            let d = |x: usize, y: usize| i32::from(x == y);
            for (e, exp) in [
                (Generator::Raise(b), d(a, b) - d(a, b + 1)),
                (Generator::Lower(b), d(a, b + 1) - d(a, b)),
            ] {
                let lhs = gen(Generator::K(a)).mul(&gen(e)).mul(&gen(Generator::Kinv(a)));
                push(
                    format!("K[{a}]*{e}*Kinv[{a}] = q_{a}^{exp} {e}"),
                    lhs.sub(&gen(e).scale(&ctx.q_a_pow(a, exp))),
                );
            }
        }
    }
    for a in ctx.simple_indices() {
        for b in ctx.simple_indices() {
            let br = super_bracket(ctx, &gen(Generator::Raise(a)), &gen(Generator::Lower(b)));
            let rhs = if a == b {
                let diff = UqExpression::word(k_ratio(a, true)).sub(&UqExpression::word(k_ratio(a, false)));
                let den = ctx.q_a_pow(a, 1) - ctx.q_a_pow(a, -1);
                diff.scale(&den.inv().expect("q_a - q_a^{-1} is nonzero"))
            } else {
                UqExpression::zero()
            };
            push(
                format!("[{}, {}}} = δ term", Generator::Raise(a), Generator::Lower(b)),
                br.sub(&rhs),
            );
        }
    }
    let m = ctx.m;
    push(format!("{}^2 = 0", Generator::Raise(m)), gen(Generator::Raise(m)).mul(&gen(Generator::Raise(m))));
    push(format!("{}^2 = 0", Generator::Lower(m)), gen(Generator::Lower(m)).mul(&gen(Generator::Lower(m))));
    for a in ctx.simple_indices() {
        for b in ctx.simple_indices().filter(|&b| b >= a + 2) {
            for (x, y) in [
                (Generator::Raise(a), Generator::Raise(b)),
                (Generator::Lower(a), Generator::Lower(b)),
            ] {
                push(format!("[{x}, {y}] = 0"), gen(x).mul(&gen(y)).sub(&gen(y).mul(&gen(x))));
            }
        }
    }
    for a in ctx.simple_indices().filter(|&a| a != m) {
        // Neighbours a+1 and a-1 where they are valid simple indices.
        let neighbours = [(a + 1 < size).then_some(a + 1), (a > 1).then(|| a - 1)];
        for (sign, nb) in ["+", "-"].iter().zip(neighbours) {
            let Some(b) = nb else { continue };
            push(
                format!("S+[{a},{a}{sign}1] = 0"),
                serre(&gen(Generator::Raise(a)), &gen(Generator::Raise(b))),
            );
            push(
                format!("S-[{a},{a}{sign}1] = 0"),
                serre(&gen(Generator::Lower(a)), &gen(Generator::Lower(b))),
            );
        }
    }
    if ctx.m >= 2 && ctx.n >= 2 {
        let up = root_vector(ctx, m - 1, m + 2);
        let down = root_vector(ctx, m + 2, m - 1);
        push(
            format!("{{E[{},{}], {}}} = 0", m - 1, m + 2, Generator::Raise(m)),
            up.mul(&gen(Generator::Raise(m))).add(&gen(Generator::Raise(m)).mul(&up)),
        );
        push(
            format!("{{E[{},{}], {}}} = 0", m + 2, m - 1, Generator::Lower(m)),
            down.mul(&gen(Generator::Lower(m))).add(&gen(Generator::Lower(m)).mul(&down)),
        );
    }
    out
}

/// Ordered monomials of length ≤ `degree`: non-decreasing in the
/// [`alphabet`] order, each odd generator used at most once. Shorter words
/// come first; equal lengths are ordered lexicographically.
pub fn probe_monomials(ctx: &GradingContext, degree: usize) -> Vec<Word> {
    let alpha = alphabet(ctx);
    let odd: Vec<bool> = alpha.iter().map(|g| g.parity(ctx).is_odd()).collect();
    let mut out = vec![Word::empty()];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..degree {
        let mut next = Vec::new();
        for w in &layer {
            let start = w.last().copied().unwrap_or(0);
            for (i, &odd_i) in odd.iter().enumerate().skip(start) {
                if odd_i && w.last() == Some(&i) {
                    continue;
                }
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word(v.iter().map(|&i| alpha[i]).collect())));
        layer = next;
    }
    out
}

/// Every word of length ≤ `degree` over the alphabet, shorter words first.
/// Unlike [`probe_monomials`] this reaches orderings such as E_{23}E_{12}
/// that ordered monomials in simple generators miss when m+n ≥ 3.
pub fn all_words(ctx: &GradingContext, degree: usize) -> Vec<Word> {
    let alpha = alphabet(ctx);
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..degree {
        layer = layer
            .iter()
            .flat_map(|w| alpha.iter().map(move |&g| w.concat(&Word::from(g))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Words of length `lengths` in the E generators only.
pub fn root_words(ctx: &GradingContext, lengths: std::ops::RangeInclusive<usize>) -> Vec<Word> {
    let es: Vec<Generator> = alphabet(ctx).into_iter().filter(|g| !g.is_cartan()).collect();
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for len in 0..=*lengths.end() {
        if lengths.contains(&len) {
            out.extend(layer.iter().cloned());
        }
        layer = layer
            .iter()
            .flat_map(|w| es.iter().map(move |&g| w.concat(&Word::from(g))))
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, n: usize) -> GradingContext {
        GradingContext::new(m, n)
    }

    #[test]
    fn generator_parities() {
        let c = ctx(2, 1);
        assert_eq!(Generator::Raise(2).parity(&c), Parity::ODD);
        assert_eq!(Generator::Raise(1).parity(&c), Parity::EVEN);
        assert_eq!(Generator::K(3).parity(&c), Parity::EVEN);
    }

    #[test]
    fn hopf_maps_on_generators() {
        let c = ctx(1, 1);
        let d = coproduct(&c, Generator::K(1));
        assert_eq!(d.terms().count(), 1);
        let s = antipode(&c, Generator::Raise(1));
        assert_eq!(s, UqExpression::parse(&c, "-E[1,2]*Kinv[1]*K[2]").unwrap());
        let st = star(&ctx(2, 1), Generator::Raise(1), 1).unwrap();
        assert_eq!(st, UqExpression::parse(&ctx(2, 1), "E[2,1]*K[1]*Kinv[2]").unwrap());
        let st = star(&c, Generator::Raise(1), 2).unwrap();
        assert_eq!(st, UqExpression::parse(&c, "-E[2,1]*K[1]*Kinv[2]").unwrap());
        let sinv = antipode_inverse(&c, Generator::Raise(1));
        assert_eq!(
            sinv,
            UqExpression::parse(&c, "-K[1]*Kinv[2]*E[1,2]*Kinv[1]*K[2]*Kinv[1]*K[2]").unwrap()
        );
    }

    #[test]
    fn k2rho_words() {
        assert_eq!(k2rho(&ctx(1, 1)).to_string(), "Kinv[1]*K[2]");
        assert_eq!(k2rho(&ctx(2, 1)).to_string(), "Kinv[2]*Kinv[2]*K[3]*K[3]");
        assert!(k2rho(&ctx(2, 2)).0.iter().all(Generator::is_cartan));
    }

    #[test]
    fn composite_roots() {
        let c = ctx(2, 1);
        assert_eq!(
            composite_root_vector(&c, 1, 3).unwrap(),
            UqExpression::parse(&c, "E[1,2]*E[2,3] - q^-1*E[2,3]*E[1,2]").unwrap()
        );
        assert_eq!(
            composite_root_vector(&c, 3, 1).unwrap(),
            UqExpression::parse(&c, "E[3,2]*E[2,1] - q*E[2,1]*E[3,2]").unwrap()
        );
        assert!(composite_root_vector(&ctx(1, 1), 1, 2).is_err());
    }

    #[test]
    fn relation_inventory() {
        let rels = defining_relations(&ctx(1, 1));
        assert!(rels.iter().any(|r| r.name == "E[1,2]^2 = 0"));
        assert!(rels.iter().any(|r| r.name == "E[2,1]^2 = 0"));
        assert!(rels.iter().any(|r| r.name == "K[2]*Kinv[2] = 1"));
        let rels = defining_relations(&ctx(2, 1));
        assert!(rels.iter().any(|r| r.name.starts_with("S+[1,1+1]")));
        assert!(rels.iter().any(|r| r.name.starts_with("S-[1,1+1]")));
        assert!(!rels.iter().any(|r| r.name.contains("1-1")));
        let rels = defining_relations(&ctx(2, 2));
        assert!(rels.iter().any(|r| r.name.starts_with("{E[1,4]")));
        assert!(rels.iter().all(|r| r.expr.parity(&ctx(2, 2)).is_some()));
    }

    #[test]
    fn probe_counts() {
        let c = ctx(1, 1);
        assert_eq!(probe_monomials(&c, 0), vec![Word::empty()]);
        let p1 = probe_monomials(&c, 1);
        assert_eq!(p1.len(), 7);
        assert_eq!(
            p1[1..].iter().map(Word::to_string).collect::<Vec<_>>(),
            ["K[1]", "Kinv[1]", "K[2]", "Kinv[2]", "E[1,2]", "E[2,1]"]
        );
        // Enumeration oracle: count all length-2 sequences over the six
        // letters that are non-decreasing and do not repeat an odd letter.
        let n = alphabet(&c).len();
        let mut count2 = 0;
        for i in 0..n {
            for j in i..n {
                if !(i == j && i >= 4) {
                    count2 += 1;
                }
            }
        }
        assert_eq!(probe_monomials(&c, 2).len(), 1 + 6 + count2);
    }

    #[test]
    fn tensor_product_sign() {
        let c = ctx(1, 1);
        let e = coproduct(&c, Generator::Raise(1));
        let sq = e.mul(&e, &c);
        // (1⊗E)(E⊗X) = -(E⊗EX) because E is odd.
        let legs = vec![Word::from(Generator::Raise(1)), Word(vec![Generator::Raise(1), Generator::K(1), Generator::Kinv(2)])];
        let c2 = sq.terms().find(|(l, _)| **l == legs).map(|(_, c)| c.clone());
        assert_eq!(c2, Some(RatFunc::from_int(-1)));
    }
}
