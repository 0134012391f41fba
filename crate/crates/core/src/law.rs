//! Multiplication oracles.

use std::any::Any;
use std::fmt;
use std::sync::Arc;

use crate::element::{format_cycles, Element};
use crate::field::{format_element, FieldCtx};
use crate::linalg::{format_entries, mul_slices, Matrix};

pub trait Law: Send + Sync + fmt::Debug {
    fn identity(&self) -> Element;
    fn mul(&self, a: &Element, b: &Element) -> Element;
    fn inv(&self, a: &Element) -> Element;
    /// Whether `a` has the shape this law multiplies.
    fn accepts(&self, a: &Element) -> bool;
    fn format(&self, a: &Element) -> String;
    fn as_any(&self) -> &dyn Any;
}

fn word(a: &Element) -> &[u32] {
    a.as_word().expect("word element")
}

// ---------------------------------------------------------------------------

/// Permutations of `0..degree`; `(a*b)(i) = a(b(i))`.
#[derive(Debug)]
pub struct PermLaw {
    pub degree: usize,
}

impl Law for PermLaw {
    fn identity(&self) -> Element {
        Element::perm((0..self.degree as u32).collect())
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (a.as_perm().unwrap(), b.as_perm().unwrap());
        Element::perm(b.iter().map(|&i| a[i as usize]).collect())
    }

    fn inv(&self, a: &Element) -> Element {
        let a = a.as_perm().unwrap();
        let mut out = vec![0u32; a.len()];
        for (i, &v) in a.iter().enumerate() {
            out[v as usize] = i as u32;
        }
        Element::perm(out)
    }

    fn accepts(&self, a: &Element) -> bool {
        match a.as_perm() {
            Some(p) if p.len() == self.degree => {
                let mut seen = vec![false; p.len()];
                p.iter()
                    .all(|&v| (v as usize) < seen.len() && !std::mem::replace(&mut seen[v as usize], true))
            }
            _ => false,
        }
    }

    fn format(&self, a: &Element) -> String {
        format_cycles(a.as_perm().unwrap())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// Invertible matrices, optionally modulo a group of scalars.
#[derive(Debug)]
pub struct MatLaw {
    pub field: Arc<FieldCtx>,
    pub dim: usize,
    /// Scalars `λ` with `λI` identified with `I`; `[1]` for linear groups.
    pub scalars: Vec<u32>,
}

impl MatLaw {
    pub fn linear(field: Arc<FieldCtx>, dim: usize) -> Self {
        MatLaw {
            field,
            dim,
            scalars: vec![1],
        }
    }

    pub fn projective(field: Arc<FieldCtx>, dim: usize, mut scalars: Vec<u32>) -> Self {
        scalars.sort_unstable();
        scalars.dedup();
        MatLaw { field, dim, scalars }
    }

    pub fn is_projective(&self) -> bool {
        self.scalars.len() > 1
    }

    pub fn element(&self, m: &Matrix) -> Element {
        assert_eq!(m.dim(), self.dim);
        Element::mat(canonical_projective(&self.field, m.entries(), &self.scalars))
    }

    pub fn matrix(&self, a: &Element) -> Matrix {
        Matrix::new(self.dim, a.as_mat().unwrap().to_vec())
    }
}

/// Least row-major encoding among the scalar multiples `λm`, `λ ∈ scalars`.
pub fn canonical_projective(field: &FieldCtx, entries: &[u32], scalars: &[u32]) -> Vec<u32> {
    let mut best = entries.to_vec();
    for &l in scalars {
        if l == 1 {
            continue;
        }
        let cand: Vec<u32> = entries.iter().map(|&v| field.mul(l, v)).collect();
        if cand < best {
            best = cand;
        }
    }
    best
}

impl Law for MatLaw {
    fn identity(&self) -> Element {
        Element::mat(Matrix::identity(self.dim).into_entries())
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let prod = mul_slices(&self.field, self.dim, a.as_mat().unwrap(), b.as_mat().unwrap());
        if self.is_projective() {
            Element::mat(canonical_projective(&self.field, &prod, &self.scalars))
        } else {
            Element::mat(prod)
        }
    }

    fn inv(&self, a: &Element) -> Element {
        let inv = self
            .matrix(a)
            .inverse(&self.field)
            .expect("group matrices are invertible");
        self.element(&inv)
    }

    fn accepts(&self, a: &Element) -> bool {
        match a.as_mat() {
            Some(m) if m.len() == self.dim * self.dim => {
                m.iter().all(|&v| v < self.field.size())
                    && self.matrix(a).det(&self.field) != 0
                    && (!self.is_projective() || canonical_projective(&self.field, m, &self.scalars) == m)
            }
            _ => false,
        }
    }

    fn format(&self, a: &Element) -> String {
        format_entries(&self.field, self.dim, a.as_mat().unwrap())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// `Z/m_1 × ... × Z/m_r` written additively.
#[derive(Debug)]
pub struct AbelianLaw {
    pub moduli: Vec<u32>,
}

impl AbelianLaw {
    /// `Some(p)` when every modulus equals the prime `p`.
    pub fn elementary_prime(&self) -> Option<u32> {
        let p = *self.moduli.first()?;
        (crate::arith::is_prime(p as u64) && self.moduli.iter().all(|&m| m == p)).then_some(p)
    }
}

impl Law for AbelianLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0; self.moduli.len()])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (word(a), word(b));
        Element::word(
            self.moduli
                .iter()
                .enumerate()
                .map(|(i, &m)| ((a[i] as u64 + b[i] as u64) % m as u64) as u32)
                .collect(),
        )
    }

    fn inv(&self, a: &Element) -> Element {
        let a = word(a);
        Element::word(self.moduli.iter().enumerate().map(|(i, &m)| (m - a[i]) % m).collect())
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == self.moduli.len()
            && w.iter().zip(&self.moduli).all(|(v, m)| v < m))
    }

    fn format(&self, a: &Element) -> String {
        format!("{:?}", word(a))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// `C_n ⋊ C_m` with the generator of `C_m` acting by `x -> x^k`;
/// `(a,b)(a',b') = (a + k^b a', b + b')`.
#[derive(Debug)]
pub struct MetacyclicLaw {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    k_pows: Vec<u64>,
}

impl MetacyclicLaw {
    pub fn new(n: u32, m: u32, k: u32) -> Self {
        let mut k_pows = Vec::with_capacity(m as usize);
        let mut cur = 1u64 % n as u64;
        for _ in 0..m {
            k_pows.push(cur);
            cur = cur * k as u64 % n as u64;
        }
        MetacyclicLaw { n, m, k, k_pows }
    }
}

impl Law for MetacyclicLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0, 0])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (word(a), word(b));
        let n = self.n as u64;
        let x = (a[0] as u64 + self.k_pows[a[1] as usize] * b[0] as u64) % n;
        Element::word(vec![x as u32, (a[1] + b[1]) % self.m])
    }

    fn inv(&self, a: &Element) -> Element {
        let a = word(a);
        let n = self.n as u64;
        let back = (self.m - a[1]) % self.m;
        let x = (n - self.k_pows[back as usize] * a[0] as u64 % n) % n;
        Element::word(vec![x as u32, back])
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == 2 && w[0] < self.n && w[1] < self.m)
    }

    fn format(&self, a: &Element) -> String {
        let w = word(a);
        format!("a^{} b^{}", w[0], w[1])
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// Dicyclic group of order `4m`: `a^i b^e` with `a^{2m} = 1`, `b^2 = a^m`,
/// `b a b^-1 = a^-1`. Order 8 gives the quaternion group.
#[derive(Debug)]
pub struct DicyclicLaw {
    pub m: u32,
}

impl Law for DicyclicLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0, 0])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (word(a), word(b));
        let n = 2 * self.m;
        let (i, e) = (a[0], a[1]);
        let (j, f) = (b[0], b[1]);
        let out = match (e, f) {
            (0, _) => vec![(i + j) % n, f],
            (_, 0) => vec![(i + n - j) % n, 1],
            _ => vec![(i + n - j + self.m) % n, 0],
        };
        Element::word(out)
    }

    fn inv(&self, a: &Element) -> Element {
        let a = word(a);
        let n = 2 * self.m;
        if a[1] == 0 {
            Element::word(vec![(n - a[0]) % n, 0])
        } else {
            // (a^i b)^2 = a^m, so (a^i b)^-1 = a^i b a^-m = a^(i+m) b
            Element::word(vec![(a[0] + self.m) % n, 1])
        }
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == 2 && w[0] < 2 * self.m && w[1] < 2)
    }

    fn format(&self, a: &Element) -> String {
        let w = word(a);
        format!("a^{} b^{}", w[0], w[1])
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// Pairs `(a, b)` over GF(2^{2f+1}) with `(a,b)(c,d) = (a+c, b+d+a^θ c)`,
/// `θ: x -> x^{2^{f+1}}`. This is the product of the lower unitriangular
/// matrices `S(a,b)` of the Suzuki group.
#[derive(Debug)]
pub struct SuzukiTwoLaw {
    pub field: Arc<FieldCtx>,
    pub theta: u64,
}

impl SuzukiTwoLaw {
    pub fn twist(&self, a: u32) -> u32 {
        self.field.pow(a, self.theta)
    }
}

impl Law for SuzukiTwoLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0, 0])
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let (x, y) = (word(x), word(y));
        let f = &self.field;
        let b = f.add(f.add(x[1], y[1]), f.mul(self.twist(x[0]), y[0]));
        Element::word(vec![f.add(x[0], y[0]), b])
    }

    fn inv(&self, x: &Element) -> Element {
        let x = word(x);
        let f = &self.field;
        Element::word(vec![x[0], f.add(x[1], f.mul(self.twist(x[0]), x[0]))])
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == 2 && w.iter().all(|&v| v < self.field.size()))
    }

    fn format(&self, a: &Element) -> String {
        let w = word(a);
        format!(
            "({},{})",
            format_element(&self.field, w[0]),
            format_element(&self.field, w[1])
        )
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// Extraspecial group of order `p^{1+2n}` and exponent `p` (p odd) on
/// `(u, c) ∈ F_p^{2n} × F_p` with `(u,c)(u',c') = (u+u', c+c'+½⟨u,u'⟩)` and
/// `⟨u,u'⟩ = Σ u_i u'_{n+i} − u_{n+i} u'_i`.
#[derive(Debug)]
pub struct ExtraspecialLaw {
    pub p: u32,
    pub n: usize,
}

impl ExtraspecialLaw {
    pub fn form(&self, u: &[u32], v: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for i in 0..self.n {
            acc += u[i] as u64 * v[self.n + i] as u64 % p;
            acc += (p - u[self.n + i] as u64 * v[i] as u64 % p) % p;
        }
        (acc % p) as u32
    }
}

impl Law for ExtraspecialLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0; 2 * self.n + 1])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (word(a), word(b));
        let p = self.p;
        let d = 2 * self.n;
        let half = (p as u64).div_ceil(2);
        let mut out: Vec<u32> = (0..d).map(|i| (a[i] + b[i]) % p).collect();
        let c = (a[d] as u64 + b[d] as u64 + half * self.form(&a[..d], &b[..d]) as u64) % p as u64;
        out.push(c as u32);
        Element::word(out)
    }

    fn inv(&self, a: &Element) -> Element {
        let a = word(a);
        Element::word(a.iter().map(|&v| (self.p - v) % self.p).collect())
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == 2 * self.n + 1 && w.iter().all(|&v| v < self.p))
    }

    fn format(&self, a: &Element) -> String {
        let w = word(a);
        format!("({:?};{})", &w[..2 * self.n], w[2 * self.n])
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// `Z_{p^r} × Z_{p^s} × Z_p` with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+b·a')`,
/// the class-2 group `⟨x,y | x^{p^r}=y^{p^s}=[x,y]^p=[x,x,y]=[y,x,y]=1⟩`.
#[derive(Debug)]
pub struct MinNonabelianLaw {
    pub p: u32,
    pub pr: u32,
    pub ps: u32,
}

impl Law for MinNonabelianLaw {
    fn identity(&self) -> Element {
        Element::word(vec![0, 0, 0])
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let (x, y) = (word(x), word(y));
        let p = self.p;
        let c = (x[2] + y[2] + (x[1] % p) * (y[0] % p)) % p;
        Element::word(vec![(x[0] + y[0]) % self.pr, (x[1] + y[1]) % self.ps, c])
    }

    fn inv(&self, x: &Element) -> Element {
        let x = word(x);
        let p = self.p;
        let c = ((x[1] % p) * (x[0] % p) + p - x[2]) % p;
        Element::word(vec![(self.pr - x[0]) % self.pr, (self.ps - x[1]) % self.ps, c])
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some(w) if w.len() == 3 && w[0] < self.pr && w[1] < self.ps && w[2] < self.p)
    }

    fn format(&self, a: &Element) -> String {
        let w = word(a);
        format!("x^{} y^{} z^{}", w[0], w[1], w[2])
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

// ---------------------------------------------------------------------------

/// Componentwise product.
#[derive(Debug)]
pub struct DirectLaw {
    pub factors: Vec<Arc<dyn Law>>,
}

impl Law for DirectLaw {
    fn identity(&self) -> Element {
        Element::tuple(self.factors.iter().map(|l| l.identity()).collect())
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (a, b) = (a.as_tuple().unwrap(), b.as_tuple().unwrap());
        Element::tuple(
            self.factors
                .iter()
                .enumerate()
                .map(|(i, l)| l.mul(&a[i], &b[i]))
                .collect(),
        )
    }

    fn inv(&self, a: &Element) -> Element {
        let a = a.as_tuple().unwrap();
        Element::tuple(self.factors.iter().enumerate().map(|(i, l)| l.inv(&a[i])).collect())
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_tuple(), Some(t) if t.len() == self.factors.len()
            && t.iter().zip(&self.factors).all(|(x, l)| l.accepts(x)))
    }

    fn format(&self, a: &Element) -> String {
        let t = a.as_tuple().unwrap();
        let parts: Vec<String> = t.iter().zip(&self.factors).map(|(x, l)| l.format(x)).collect();
        format!("<{}>", parts.join(", "))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
