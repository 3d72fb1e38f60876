//! Independent numeric model of U_q(gl(m|n)) at a rational value of q:
//! the vector module, its dual, graded tensor products built directly from
//! the coproduct formulas, and a brute-force highest-weight closure.
//! Shares no code with the library beyond the rational number type.

#![allow(dead_code)]

use num_rational::BigRational as Q;
use num_traits::{One, Signed, Zero};

pub type Mat = Vec<Vec<Q>>;

pub fn int(k: i64) -> Q {
    Q::from_integer(k.into())
}

pub fn frac(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

pub fn scale(a: &Mat, c: &Q) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn apply(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|r| r.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// (f⊗g)(v_i⊗w_j) = (-1)^{[g][i]} f v_i ⊗ g w_j.
pub fn graded_kron(f: &Mat, g: &Mat, g_odd: bool, f_domain: &[bool]) -> Mat {
    let (fr, fc, gr, gc) = (f.len(), f[0].len(), g.len(), g[0].len());
    let mut out = zeros(fr * gr, fc * gc);
    for i in 0..fr {
        for j in 0..fc {
            if f[i][j].is_zero() {
                continue;
            }
            let sign = if g_odd && f_domain[j] { -Q::one() } else { Q::one() };
            for k in 0..gr {
                for l in 0..gc {
                    if !g[k][l].is_zero() {
                        out[i * gr + k][j * gc + l] = &sign * &f[i][j] * &g[k][l];
                    }
                }
            }
        }
    }
    out
}

/// P(v_i⊗w_j) = (-1)^{[i][j]} w_j⊗v_i.
pub fn graded_flip(p: &[bool], r: &[bool]) -> Mat {
    let (a, b) = (p.len(), r.len());
    let mut out = zeros(a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            out[j * a + i][i * b + j] = if p[i] && r[j] { -Q::one() } else { Q::one() };
        }
    }
    out
}

/// Rank by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        let pivot: Vec<Q> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// Basis of {x : a x = 0}.
pub fn nullspace(a: &Mat, cols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        let pivot: Vec<Q> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pivot;
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    K(usize),
    Kinv(usize),
    /// E_{a,a+1}
    E(usize),
    /// E_{a+1,a}
    F(usize),
}

#[derive(Clone, Debug)]
pub struct Module {
    pub parities: Vec<bool>,
    pub mats: Vec<(Gen, Mat)>,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn get(&self, g: Gen) -> &Mat {
        &self.mats.iter().find(|(h, _)| *h == g).expect("generator present").1
    }
}

#[derive(Clone, Debug)]
pub struct Model {
    pub m: usize,
    pub n: usize,
    pub q: Q,
}

impl Model {
    pub fn new(m: usize, n: usize, q: Q) -> Self {
        Model { m, n, q }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn odd(&self, a: usize) -> bool {
        a > self.m
    }

    pub fn gen_odd(&self, g: Gen) -> bool {
        match g {
            Gen::E(a) | Gen::F(a) => self.odd(a) != self.odd(a + 1),
            _ => false,
        }
    }

    /// q_a^e with q_a = q^{(-1)^{[a]}}.
    pub fn qa(&self, a: usize, e: i32) -> Q {
        let e = if self.odd(a) { -e } else { e };
        if e >= 0 {
            self.q.pow(e)
        } else {
            self.q.recip().pow(-e)
        }
    }

    pub fn gens(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for a in 1..=self.size() {
            out.push(Gen::K(a));
            out.push(Gen::Kinv(a));
        }
        for a in 1..self.size() {
            out.push(Gen::E(a));
            out.push(Gen::F(a));
        }
        out
    }

    fn vector_matrix(&self, g: Gen) -> Mat {
        let n = self.size();
        let mut out = zeros(n, n);
        match g {
            Gen::K(a) | Gen::Kinv(a) => {
                for (b, row) in out.iter_mut().enumerate() {
                    row[b] = if b + 1 == a {
                        self.qa(a, if matches!(g, Gen::K(_)) { 1 } else { -1 })
                    } else {
                        Q::one()
                    };
                }
            }
            Gen::E(a) => out[a - 1][a] = Q::one(),
            Gen::F(a) => out[a][a - 1] = Q::one(),
        }
        out
    }

    pub fn vector(&self) -> Module {
        Module {
            parities: (1..=self.size()).map(|a| self.odd(a)).collect(),
            mats: self.gens().into_iter().map(|g| (g, self.vector_matrix(g))).collect(),
        }
    }

    /// S(K) = K^{-1}, S(E_{a,a+1}) = -E K_a^{-1} K_{a+1}, S(E_{a+1,a}) = -K_a K_{a+1}^{-1} F.
    fn antipode_image(&self, r: &Module, g: Gen) -> Mat {
        let minus = -Q::one();
        match g {
            Gen::K(a) => r.get(Gen::Kinv(a)).clone(),
            Gen::Kinv(a) => r.get(Gen::K(a)).clone(),
            Gen::E(a) => scale(&mul(&mul(r.get(g), r.get(Gen::Kinv(a))), r.get(Gen::K(a + 1))), &minus),
            Gen::F(a) => scale(&mul(&mul(r.get(Gen::K(a)), r.get(Gen::Kinv(a + 1))), r.get(g)), &minus),
        }
    }

    /// Dual module: π̄(x)_{ab} = (-1)^{[x][b]} π(S x)_{ba}.
    pub fn dual(&self, r: &Module) -> Module {
        let d = r.dim();
        let mats = self
            .gens()
            .into_iter()
            .map(|g| {
                let s = self.antipode_image(r, g);
                let mut out = zeros(d, d);
                for a in 0..d {
                    for b in 0..d {
                        let v = s[b][a].clone();
                        out[a][b] = if self.gen_odd(g) && r.parities[b] { -v } else { v };
                    }
                }
                (g, out)
            })
            .collect();
        Module {
            parities: r.parities.clone(),
            mats,
        }
    }

    /// Graded tensor product through Δ(K) = K⊗K,
    /// Δ(E_{a,a+1}) = E⊗K_a K_{a+1}^{-1} + 1⊗E, Δ(E_{a+1,a}) = F⊗1 + K_a^{-1} K_{a+1}⊗F.
    pub fn tensor(&self, r1: &Module, r2: &Module) -> Module {
        let p1 = &r1.parities;
        let id1 = identity(r1.dim());
        let id2 = identity(r2.dim());
        let mats = self
            .gens()
            .into_iter()
            .map(|g| {
                let odd = self.gen_odd(g);
                let m = match g {
                    Gen::K(_) | Gen::Kinv(_) => graded_kron(r1.get(g), r2.get(g), false, p1),
                    Gen::E(a) => {
                        let k2 = mul(r2.get(Gen::K(a)), r2.get(Gen::Kinv(a + 1)));
                        add(
                            &graded_kron(r1.get(g), &k2, false, p1),
                            &graded_kron(&id1, r2.get(g), odd, p1),
                        )
                    }
                    Gen::F(a) => {
                        let k1 = mul(r1.get(Gen::Kinv(a)), r1.get(Gen::K(a + 1)));
                        add(
                            &graded_kron(r1.get(g), &id2, false, p1),
                            &graded_kron(&k1, r2.get(g), odd, p1),
                        )
                    }
                };
                (g, m)
            })
            .collect();
        let parities = p1
            .iter()
            .flat_map(|&a| r2.parities.iter().map(move |&b| a != b))
            .collect();
        Module { parities, mats }
    }

    /// Weight of a basis vector of a module whose K images are diagonal,
    /// read off from the K_a eigenvalues q_a^{λ_a}.
    pub fn basis_weight(&self, r: &Module, i: usize) -> Vec<i64> {
        (1..=self.size())
            .map(|a| {
                let ev = r.get(Gen::K(a))[i][i].clone();
                (-8i64..=8)
                    .find(|&e| self.qa(a, e as i32) == ev)
                    .expect("K eigenvalue is a small power of q_a")
            })
            .collect()
    }

    /// Highest-weight vectors (joint kernel of the raising images inside each
    /// weight space) with their weights, and the dimension of the submodule
    /// each one generates under the lowering images.
    pub fn highest_weight_closures(&self, r: &Module) -> Vec<(Vec<i64>, usize)> {
        let d = r.dim();
        let weights: Vec<Vec<i64>> = (0..d).map(|i| self.basis_weight(r, i)).collect();
        let mut distinct = weights.clone();
        distinct.sort();
        distinct.dedup();
        let mut out = Vec::new();
        for w in distinct {
            let cols: Vec<usize> = (0..d).filter(|&i| weights[i] == w).collect();
            let mut stacked = Vec::new();
            for a in 1..self.size() {
                for row in r.get(Gen::E(a)) {
                    stacked.push(cols.iter().map(|&c| row[c].clone()).collect::<Vec<Q>>());
                }
            }
            for local in nullspace(&stacked, cols.len()) {
                let mut v = vec![Q::zero(); d];
                for (x, &c) in local.iter().zip(&cols) {
                    v[c] = x.clone();
                }
                out.push((w.clone(), self.lowering_closure(r, v)));
            }
        }
        out
    }

    fn lowering_closure(&self, r: &Module, start: Vec<Q>) -> usize {
        let mut span = vec![start.clone()];
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for a in 1..self.size() {
                let u = apply(r.get(Gen::F(a)), &v);
                if u.iter().all(Zero::is_zero) {
                    continue;
                }
                span.push(u.clone());
                if rank(&span) == span.len() {
                    frontier.push(u);
                } else {
                    span.pop();
                }
            }
        }
        span.len()
    }
}

/// Multi-indices (θ ∈ {0,1}^m, l ∈ Z_+^n) of total degree k, by direct
/// enumeration.
pub fn count_multi_indices(m: usize, n: usize, k: usize) -> usize {
    fn go(slots: &[usize], k: usize) -> usize {
        match slots.split_first() {
            None => usize::from(k == 0),
            Some((&cap, rest)) => (0..=cap.min(k)).map(|e| go(rest, k - e)).sum(),
        }
    }
    let slots: Vec<usize> = std::iter::repeat_n(1, m).chain(std::iter::repeat_n(k, n)).collect();
    go(&slots, k)
}

pub fn is_zero_matrix(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

pub fn max_abs(a: &Mat) -> Q {
    a.iter().flatten().map(Signed::abs).fold(Q::zero(), |x, y| if y > x { y } else { x })
}
