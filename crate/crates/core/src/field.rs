//! Exact arithmetic in GF(p^k).
//!
//! Elements are packed integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` where
//! `c_i` are the coefficients of the polynomial representative modulo the
//! context's irreducible modulus. The packed form is what matrices and tuple
//! elements store; [`FieldElement`] pairs a packed value with its context for
//! the checked, context-aware API.

use std::fmt;
use std::sync::Arc;

use crate::arith::{factorize, is_prime};
use crate::error::FieldError;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;
const TABLE_LIMIT: u32 = 1 << 16;

#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, constant term first, length `k + 1`.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

#[derive(Debug)]
struct LogTables {
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` unused.
    log: Vec<u32>,
}

/// Which subfield a minimal polynomial is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subfield {
    Prime,
    /// `F_{p^{k/2}}` inside `F_{p^k}`, k even.
    Half,
}

impl FieldCtx {
    /// Builds GF(p^k) with the lowest monic irreducible modulus, ordering
    /// candidates by their packed lower coefficients (constant term least
    /// significant).
    pub fn new(p: u64, k: u32) -> Result<Arc<Self>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if !(1..=16).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(FieldError::TooLarge(p.saturating_pow(k)))?;
        let p = p as u32;
        let q = q as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|rest| {
                    let mut m = unpack(rest, p, k);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if k > 1 && q <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(Arc::new(ctx))
    }

    /// GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Arc<Self>, FieldError> {
        match factorize(q).as_slice() {
            [(p, k)] => FieldCtx::new(*p, *k),
            _ => Err(FieldError::Unsupported(format!("{q} is not a prime power"))),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32, FieldError> {
        if coeffs.len() > self.k as usize {
            return Err(FieldError::Unsupported(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.k
            )));
        }
        Ok(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c % self.p))
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        unpack(a, self.p, self.k)
    }

    /// The class of `X` (or 1 for a prime field's generator-free case).
    pub fn x(&self) -> u32 {
        if self.k == 1 {
            // the modulus is X, so X reduces to 0
            0
        } else {
            self.p
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.k == 1 {
            ((a as u64 + b as u64) % self.p as u64) as u32
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if self.k == 1 {
            (self.p - a) % self.p
        } else {
            self.digitwise(a, 0, |x, _, p| (p - x) % p)
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.exp[((self.q - 1 - t.log[a as usize]) % (self.q - 1)) as usize]),
            None => Some(self.pow(a, self.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a as usize] as u64 * (e % (self.q as u64 - 1));
            return t.exp[(l % (self.q as u64 - 1)) as usize];
        }
        let mut base = a;
        let mut e = e;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^i)`.
    pub fn frobenius(&self, a: u32, i: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(i % self.k))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut ord = self.q as u64 - 1;
        for (l, _) in factorize(ord) {
            while ord % l == 0 && self.pow(a, ord / l) == 1 {
                ord /= l;
            }
        }
        ord
    }

    /// The least packed value generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        let n = self.q as u64 - 1;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(l, _)| l).collect();
        (1..self.q)
            .find(|&a| primes.iter().all(|&l| self.pow(a, n / l) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// An element of exact multiplicative order `n`.
    pub fn element_of_order(&self, n: u64) -> Result<u32, FieldError> {
        let m = self.q as u64 - 1;
        if n == 0 || m % n != 0 {
            return Err(FieldError::NoElementOfOrder { n, q: self.q as u64 });
        }
        Ok(self.pow(self.primitive_element(), m / n))
    }

    fn half_size(&self) -> Result<u64, FieldError> {
        if self.k % 2 != 0 {
            return Err(FieldError::Unsupported(format!(
                "GF({}) is not a quadratic extension",
                self.q
            )));
        }
        Ok((self.p as u64).pow(self.k / 2))
    }

    /// `a + a^Q` for the subfield `F_Q`, `Q^2 = |F|`.
    pub fn relative_trace(&self, a: u32) -> Result<u32, FieldError> {
        let half = self.half_size()?;
        Ok(self.add(a, self.pow(a, half)))
    }

    /// `a^(Q+1)` for the subfield `F_Q`, `Q^2 = |F|`.
    pub fn relative_norm(&self, a: u32) -> Result<u32, FieldError> {
        let half = self.half_size()?;
        Ok(self.pow(a, half + 1))
    }

    /// `a^Q` for the subfield `F_Q`: the involutory field automorphism.
    pub fn conjugate(&self, a: u32) -> Result<u32, FieldError> {
        let half = self.half_size()?;
        Ok(self.pow(a, half))
    }

    pub fn in_half_subfield(&self, a: u32) -> bool {
        self.conjugate(a).map(|c| c == a).unwrap_or(false)
    }

    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += f(a % self.p, b % self.p, self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let p = self.p as u64;
        let da = unpack(a, self.p, self.k);
        let db = unpack(b, self.p, self.k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d] % p;
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let m = self.modulus[i] as u64;
                prod[d - k + i] = (prod[d - k + i] + (p - m) % p * c) % p;
            }
        }
        prod[..k].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
    }

    fn build_tables(&self) -> LogTables {
        let n = self.q - 1;
        let primes: Vec<u64> = factorize(n as u64).into_iter().map(|(l, _)| l).collect();
        let slow_pow = |a: u32, mut e: u64| {
            let mut base = a;
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_poly(acc, base);
                }
                base = self.mul_poly(base, base);
                e >>= 1;
            }
            acc
        };
        let g = (2..self.q)
            .find(|&a| primes.iter().all(|&l| slow_pow(a, n as u64 / l) != 1))
            .expect("primitive element exists");
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for i in 0..n as usize {
            exp[i] = cur;
            exp[i + n as usize] = cur;
            log[cur as usize] = i as u32;
            cur = self.mul_poly(cur, g);
        }
        LogTables { exp, log }
    }

    /// Solves `X^Q + X = c` in `F_{Q^2}`, characteristic 2, returning the
    /// least packed solution.
    pub fn solve_artin_schreier(&self, c: u32) -> Result<u32, FieldError> {
        if self.p != 2 {
            return Err(FieldError::Unsupported(
                "Artin-Schreier solving needs characteristic 2".into(),
            ));
        }
        let half = self.half_size()?;
        let k = self.k as usize;
        // Column j of the F_2-linear map x -> x^Q + x is the image of X^j.
        let cols: Vec<u32> = (0..k)
            .map(|j| {
                let b = 1u32 << j;
                self.add(self.pow(b, half), b)
            })
            .collect();
        // Rows as bitmasks over the unknowns, augmented with the target bit.
        let mut rows: Vec<(u32, u32)> = (0..k)
            .map(|i| {
                let mask = (0..k).fold(0u32, |m, j| m | (((cols[j] >> i) & 1) << j));
                (mask, (c >> i) & 1)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..k {
            let Some(sel) = (r..k).find(|&i| rows[i].0 >> col & 1 == 1) else {
                continue;
            };
            rows.swap(r, sel);
            for i in 0..k {
                if i != r && rows[i].0 >> col & 1 == 1 {
                    rows[i].0 ^= rows[r].0;
                    rows[i].1 ^= rows[r].1;
                }
            }
            pivots.push(col);
            r += 1;
        }
        if rows[r..].iter().any(|&(m, t)| m == 0 && t == 1) {
            return Err(FieldError::Unsolvable);
        }
        let mut particular = 0u32;
        for (i, &col) in pivots.iter().enumerate() {
            particular |= rows[i].1 << col;
        }
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        let kernel: Vec<u32> = free
            .iter()
            .map(|&f| {
                let mut v = 1u32 << f;
                for (i, &col) in pivots.iter().enumerate() {
                    v |= (rows[i].0 >> f & 1) << col;
                }
                v
            })
            .collect();
        let mut best = u32::MAX;
        for combo in 0..(1u32 << kernel.len()) {
            let mut y = particular;
            for (i, v) in kernel.iter().enumerate() {
                if combo >> i & 1 == 1 {
                    y ^= v;
                }
            }
            best = best.min(y);
        }
        Ok(best)
    }

    /// Minimal polynomial of `a` over the prime field or the half subfield,
    /// as packed field elements, constant term first, monic.
    pub fn minimal_polynomial(&self, a: u32, over: Subfield) -> Result<Vec<u32>, FieldError> {
        let step = match over {
            Subfield::Prime => self.p as u64,
            Subfield::Half => self.half_size()?,
        };
        let mut conjugates = vec![a];
        let mut c = self.pow(a, step);
        while c != a {
            conjugates.push(c);
            c = self.pow(c, step);
        }
        let mut poly = vec![1u32];
        for r in conjugates {
            // poly * (X - r)
            let mut next = vec![0u32; poly.len() + 1];
            for (i, &coef) in poly.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], coef);
                next[i] = self.sub(next[i], self.mul(coef, r));
            }
            poly = next;
        }
        Ok(poly)
    }

    pub fn element(self: &Arc<Self>, value: u32) -> FieldElement {
        assert!(value < self.q, "packed value out of range");
        FieldElement {
            ctx: Arc::clone(self),
            value,
        }
    }
}

fn unpack(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

/// Remainder of `num` modulo the monic `den` over Z/p (constant first).
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = den.len() - 1;
    let p = p as u64;
    while r.len() > dd {
        let lead = r.pop().unwrap() % p;
        let shift = r.len() - dd;
        if lead != 0 {
            for i in 0..dd {
                r[shift + i] = (r[shift + i] + (p - den[i] as u64 % p) * lead) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 || poly[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for rest in 0..count {
            let mut den = unpack(rest as u32, p, d as u32);
            den.push(1);
            if poly_rem(poly, &den, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// A field element bound to its context.
#[derive(Clone)]
pub struct FieldElement {
    ctx: Arc<FieldCtx>,
    value: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.ctx.coeffs(self.value)
    }

    pub fn arith(&self, other: &FieldElement, op: FieldOp) -> Result<FieldElement, FieldError> {
        if !Arc::ptr_eq(&self.ctx, &other.ctx)
            && (self.ctx.p, self.ctx.k, &self.ctx.modulus) != (other.ctx.p, other.ctx.k, &other.ctx.modulus)
        {
            return Err(FieldError::ContextMismatch);
        }
        let (a, b) = (self.value, other.value);
        let value = match op {
            FieldOp::Add => self.ctx.add(a, b),
            FieldOp::Sub => self.ctx.sub(a, b),
            FieldOp::Mul => self.ctx.mul(a, b),
            FieldOp::Div => self.ctx.div(a, b).ok_or(FieldError::DivisionByZero)?,
        };
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            value,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.ctx.element(self.ctx.pow(self.value, e))
    }

    pub fn frobenius(&self, i: u32) -> FieldElement {
        self.ctx.element(self.ctx.frobenius(self.value, i))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.ctx.modulus == other.ctx.modulus && self.ctx.p == other.ctx.p
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(&self.ctx, self.value))
    }
}

/// Prime-field elements print as integers, others as `{c0,c1,...}`.
pub fn format_element(ctx: &FieldCtx, a: u32) -> String {
    if ctx.k == 1 {
        a.to_string()
    } else {
        let c: Vec<String> = ctx.coeffs(a).iter().map(|c| c.to_string()).collect();
        format!("{{{}}}", c.join(","))
    }
}

/// Comma-separated coefficient list, constant term first.
pub fn format_coeffs(coeffs: &[u32]) -> String {
    coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_coeffs(text: &str) -> Result<Vec<u32>, std::num::ParseIntError> {
    text.split(',').map(|t| t.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, k: u32) -> Arc<FieldCtx> {
        FieldCtx::new(p, k).unwrap()
    }

    #[test]
    fn prime_field_modulus_is_x() {
        assert_eq!(gf(2, 1).modulus(), &[0, 1]);
    }

    #[test]
    fn lowest_irreducible_moduli() {
        // Oracle: scan monic candidates in order and factor each by brute force
        // root/quadratic-factor search, independent of is_irreducible.
        fn brute_lowest(p: u32, k: u32) -> Vec<u32> {
            let q = p.pow(k);
            'cand: for rest in 0..q {
                let mut m = unpack(rest, p, k);
                m.push(1);
                // a reducible polynomial of degree <= 3 has a root; for
                // degree 4 also try every monic quadratic by multiplication.
                for r in 0..p {
                    let v = m
                        .iter()
                        .rev()
                        .fold(0u64, |acc, &c| (acc * r as u64 + c as u64) % p as u64);
                    if v == 0 {
                        continue 'cand;
                    }
                }
                if k == 4 {
                    for a in 0..p * p {
                        for b in 0..p * p {
                            let f = [a % p, a / p, 1];
                            let g = [b % p, b / p, 1];
                            let mut prod = [0u32; 5];
                            for i in 0..3 {
                                for j in 0..3 {
                                    prod[i + j] = (prod[i + j] + f[i] * g[j]) % p;
                                }
                            }
                            if prod[..] == m[..] {
                                continue 'cand;
                            }
                        }
                    }
                }
                return m;
            }
            unreachable!()
        }
        assert_eq!(gf(2, 4).modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(gf(2, 4).modulus(), brute_lowest(2, 4).as_slice());
        assert_eq!(gf(5, 2).modulus(), &[2, 0, 1]);
        assert_eq!(gf(5, 2).modulus(), brute_lowest(5, 2).as_slice());
        assert_eq!(gf(2, 3).modulus(), brute_lowest(2, 3).as_slice());
        assert_eq!(gf(3, 3).modulus(), brute_lowest(3, 3).as_slice());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldCtx::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldCtx::new(2, 0).unwrap_err(), FieldError::DegreeOutOfRange(0));
        assert_eq!(FieldCtx::new(2, 17).unwrap_err(), FieldError::DegreeOutOfRange(17));
        assert!(matches!(FieldCtx::new(3, 16), Err(FieldError::TooLarge(_))));
    }

    #[test]
    fn x_times_x_cubed_in_gf16() {
        let f = gf(2, 4);
        let x = f.x();
        let x3 = f.pow(x, 3);
        // X^4 = X + 1 under X^4 + X + 1
        assert_eq!(f.mul(x, x3), f.from_coeffs(&[1, 1]).unwrap());
        assert_eq!(f.mul_poly(x, x3), f.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn table_and_polynomial_multiplication_agree() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (2, 4), (3, 3)] {
            let f = gf(p, k);
            for a in f.elements() {
                for b in f.elements() {
                    let expect = if a == 0 || b == 0 { 0 } else { f.mul_poly(a, b) };
                    assert_eq!(f.mul(a, b), expect);
                }
            }
        }
    }

    #[test]
    fn inverses_and_identities() {
        let f = gf(3, 3);
        for a in f.elements() {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.sub(a, a), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn checked_arith_errors() {
        let f = gf(5, 2);
        let g = gf(7, 1);
        let a = f.element(3);
        assert_eq!(
            a.arith(&f.element(0), FieldOp::Div).unwrap_err(),
            FieldError::DivisionByZero
        );
        assert_eq!(
            a.arith(&g.element(1), FieldOp::Add).unwrap_err(),
            FieldError::ContextMismatch
        );
        assert_eq!(a.arith(&f.element(0), FieldOp::Add).unwrap(), a);
    }

    #[test]
    fn frobenius_examples() {
        let f = gf(2, 3);
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
            // theta = frobenius(., 2) is a -> a^4 and theta twice is a -> a^2
            let t = f.frobenius(a, 2);
            assert_eq!(t, f.pow(a, 4));
            assert_eq!(f.frobenius(t, 2), f.pow(a, 2));
        }
        let p = gf(7, 1);
        for a in p.elements() {
            assert_eq!(p.frobenius(a, 0), a);
            assert_eq!(p.pow(a, 7), a);
        }
    }

    #[test]
    fn artin_schreier_gf16_over_gf4() {
        let f = gf(2, 4);
        assert_eq!(f.solve_artin_schreier(0).unwrap(), 0);
        let z = f.solve_artin_schreier(1).unwrap();
        assert_eq!(f.add(f.pow(z, 4), z), 1);
        // exhaustive scan: c is solvable iff some x maps to it
        let image: Vec<u32> = f.elements().map(|x| f.add(f.pow(x, 4), x)).collect();
        for c in f.elements() {
            match f.solve_artin_schreier(c) {
                Ok(y) => {
                    assert_eq!(f.add(f.pow(y, 4), y), c);
                    let least = f.elements().find(|&x| image[x as usize] == c).unwrap();
                    assert_eq!(y, least);
                }
                Err(e) => {
                    assert_eq!(e, FieldError::Unsolvable);
                    assert!(!image.contains(&c));
                }
            }
        }
    }

    #[test]
    fn artin_schreier_rejects_odd_settings() {
        assert!(gf(3, 2).solve_artin_schreier(1).is_err());
        assert!(gf(2, 3).solve_artin_schreier(1).is_err());
    }

    #[test]
    fn elements_of_given_order() {
        let f = gf(2, 3);
        assert_eq!(f.element_of_order(1).unwrap(), 1);
        let g = f.element_of_order(7).unwrap();
        assert_eq!(f.pow(g, 7), 1);
        assert_ne!(g, 1);
        let f16 = gf(2, 4);
        let e = f16.element_of_order(5).unwrap();
        let brute = (1..16u64).find(|&k| f16.pow(e, k) == 1).unwrap();
        assert_eq!(brute, 5);
        assert!(f16.element_of_order(7).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let f = gf(7, 1);
        assert_eq!(f.minimal_polynomial(3, Subfield::Prime).unwrap(), vec![4, 1]);
        let f4 = gf(2, 2);
        let w = f4.element_of_order(3).unwrap();
        assert_eq!(f4.minimal_polynomial(w, Subfield::Prime).unwrap(), vec![1, 1, 1]);
        let f8 = gf(2, 3);
        let g = f8.element_of_order(7).unwrap();
        let m = f8.minimal_polynomial(g, Subfield::Prime).unwrap();
        assert_eq!(m.len(), 4);
        assert!(is_irreducible(&m, 2));
        // divides X^7 - 1
        let mut x7 = vec![0u32; 8];
        x7[0] = 1;
        x7[7] = 1;
        assert!(poly_rem(&x7, &m, 2).iter().all(|&c| c == 0));
    }

    #[test]
    fn minimal_polynomial_over_half_subfield() {
        let f = gf(2, 4);
        for a in f.elements() {
            let m = f.minimal_polynomial(a, Subfield::Half).unwrap();
            assert!(m.len() <= 3);
            assert!(m.iter().all(|&c| f.in_half_subfield(c)));
        }
    }

    #[test]
    fn coefficient_lists_round_trip() {
        let c = vec![1, 0, 2];
        assert_eq!(parse_coeffs(&format_coeffs(&c)).unwrap(), c);
    }
}
