//! Finite fields GF(p^n) for small prime powers.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `c_i` is the coefficient of `x^i` in the canonical representative
//! modulo the field's irreducible modulus. Addition and multiplication are
//! tabulated at construction; inverses come from the extended Euclidean
//! algorithm on polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Largest order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("element code {0} out of range for the field")]
    OutOfRange(u32),
}

/// Characteristic, degree and modulus of a finite field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    /// Monic irreducible modulus, coefficients low to high (length `n + 1`).
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn order(&self) -> u32 {
        self.p.pow(self.n)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {}", self.order(), format_poly(&self.modulus))
    }
}

fn format_poly(c: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &a) in c.iter().enumerate().rev() {
        if a == 0 && !(i == 0 && terms.is_empty()) {
            continue;
        }
        let coef = if a == 1 && i > 0 { String::new() } else { a.to_string() };
        terms.push(match i {
            0 => a.to_string(),
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        });
    }
    terms.join(" + ")
}

/// Factors `q = p^n`.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let p = (2u64..)
        .take_while(|d| d * d <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p, n))
}

fn pow_mod(b: u32, mut e: u32, p: u32) -> u32 {
    let p = u64::from(p);
    let mut base = u64::from(b) % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_sub_scaled(a: &mut [u32], b: &[u32], shift: usize, c: u32, p: u32) {
    for (i, &bi) in b.iter().enumerate() {
        let t = (u64::from(bi) * u64::from(c) % u64::from(p)) as u32;
        a[i + shift] = (a[i + shift] + p - t) % p;
    }
}

/// Quotient and remainder of `a / b` over GF(p); `b` must be nonzero.
fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = (u64::from(*r.last().unwrap()) * u64::from(lead_inv) % u64::from(p)) as u32;
        q[shift] = c;
        poly_sub_scaled(&mut r, &b, shift, c, p);
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u64::from(x) * u64::from(y)) % u64::from(p);
        }
    }
    trim(out.into_iter().map(|x| x as u32).collect())
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
fn poly_inverse(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    let (mut r0, mut r1) = (m.to_vec(), trim(a.to_vec()));
    let (mut s0, mut s1) = (Vec::new(), vec![1u32]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; a unit iff it is a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod(r0[0], p);
    let inv = poly_mul(&s0, &[c], p);
    Some(poly_divmod(&inv, m, p).1)
}

fn digits(mut code: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Irreducibility of a monic polynomial by trial division by every monic
/// polynomial of degree at most half its degree.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    let deg = poly.len().saturating_sub(1) as u32;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let mut f = digits(code, p, d);
            f.push(1);
            if poly_divmod(&poly, &f, p).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// A finite field with tabulated arithmetic.
#[derive(Clone)]
pub struct GaloisField {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField({})", self.spec)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for GaloisField {}

/// Builds GF(q). The modulus is the smallest monic irreducible polynomial of
/// degree `n`, ordering lower coefficients as a base-`p` integer with the
/// `x^{n-1}` coefficient most significant.
pub fn make_field(q: u64) -> Result<GaloisField, FieldError> {
    let (p, n) = prime_power(q)?;
    if q > MAX_FIELD_ORDER {
        return Err(FieldError::TooLarge(q));
    }
    let p = p as u32;
    let modulus = (0..p.pow(n))
        .map(|code| {
            let mut m = digits(code, p, n);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree");
    Ok(GaloisField::with_spec(FieldSpec { p, n, modulus }))
}

impl GaloisField {
    fn with_spec(spec: FieldSpec) -> Self {
        let (p, n) = (spec.p, spec.n);
        let q = spec.order();
        let qs = q as usize;
        let polys: Vec<Vec<u32>> = (0..q).map(|c| digits(c, p, n)).collect();
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = polys[a].iter().zip(&polys[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = undigits(&sum, p);
                let prod = poly_divmod(&poly_mul(&polys[a], &polys[b], p), &spec.modulus, p).1;
                mul[a * qs + b] = undigits(&prod, p);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    let inv = poly_inverse(&polys[a as usize], &spec.modulus, p)
                        .expect("nonzero elements are units modulo an irreducible");
                    undigits(&inv, p)
                }
            })
            .collect();
        Self {
            spec,
            q,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, code: 0 }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, code: 1 }
    }

    pub fn element(&self, code: u32) -> Result<FieldElement<'_>, FieldError> {
        if code < self.q {
            Ok(FieldElement { field: self, code })
        } else {
            Err(FieldError::OutOfRange(code))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.q).map(move |code| FieldElement { field: self, code })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.inv[a as usize])
        }
    }

    /// Coefficients `(a, b)` of the first `t^2 + a t + b` without a root in
    /// the field, scanning `a` then `b` in code order.
    pub fn find_irreducible_quadratic(&self) -> (u32, u32) {
        for a in 0..self.q {
            for b in 0..self.q {
                let has_root = (0..self.q)
                    .any(|t| self.add(self.add(self.mul(t, t), self.mul(a, t)), b) == 0);
                if !has_root {
                    return (a, b);
                }
            }
        }
        unreachable!("every finite field has an irreducible quadratic")
    }
}

/// A field element bound to its field.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f GaloisField,
    code: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&digits(self.code, self.field.spec.p, self.field.spec.n)))
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.same_field(other)
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> FieldElement<'f> {
    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn field(&self) -> &'f GaloisField {
        self.field
    }

    /// Coefficients of the polynomial representative, low to high.
    pub fn coefficients(&self) -> Vec<u32> {
        digits(self.code, self.field.spec.p, self.field.spec.n)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) || self.field == other.field
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, code: u32) -> Self {
        Self { field: self.field, code }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.code, other.code)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.code, other.code)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.code, other.code)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.field.inv(self.code).map(|c| self.with(c))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.with(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("field mismatch")
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("field mismatch")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("field mismatch")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = Self;
    fn neg(self) -> Self {
        self.with(self.field.neg(self.code))
    }
}
