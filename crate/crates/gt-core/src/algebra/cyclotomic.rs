//! Exact elements of cyclotomic fields Q(zeta_n).
//!
//! An element is stored as its coefficient vector with respect to the power
//! basis 1, z, ..., z^(phi(n)-1) of Q[x]/Phi_n(x), where z stands for the
//! primitive n-th root of unity exp(2*pi*i/n). Elements of different
//! conductors are combined by embedding both into Q(zeta_lcm) via the
//! substitution x -> x^(lcm/n); no basis canonicalization beyond reduction
//! modulo Phi is performed, so equality is decided after embedding.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Monic coefficients of Phi_n, ascending degree, length phi(n)+1.
///
/// Computed by exact division of x^n - 1 by the Phi_d for proper divisors d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut cache: Vec<(u32, Vec<BigInt>)> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        // x^d - 1
        let mut f = vec![BigInt::zero(); d as usize + 1];
        f[0] = BigInt::from(-1);
        f[d as usize] = BigInt::one();
        for (e, phi_e) in &cache {
            if d % e == 0 {
                f = poly_exact_div(&f, phi_e);
            }
        }
        cache.push((d, f));
    }
    cache.pop().unwrap().1
}

/// Quotient of integer polynomials; the division must be exact.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// zeta_n^k, reduced modulo Phi_n.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Cyclotomic::reduce(n, coeffs)
    }

    fn reduce(n: u32, mut coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(n) as usize;
        if coeffs.len() > phi {
            let modulus = cyclotomic_polynomial(n);
            // long division by the monic Phi_n, keeping the remainder
            for i in (phi..coeffs.len()).rev() {
                let c = coeffs[i].clone();
                if c.is_zero() {
                    continue;
                }
                coeffs[i] = Rational::zero();
                for j in 0..phi {
                    let t = Rational::from_integer(modulus[j].clone()) * &c;
                    coeffs[i - phi + j] -= t;
                }
            }
        }
        coeffs.resize(phi, Rational::zero());
        Cyclotomic {
            conductor: n,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if the element is rational, i.e. all basis
    /// coefficients beyond the constant one vanish.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrites the element in Q(zeta_m); m must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Cyclotomic {
        assert!(m % self.conductor == 0);
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Cyclotomic::reduce(m, coeffs)
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic, u32) {
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m), m)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b, m) = self.common(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b, m) = self.common(other);
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        Cyclotomic::reduce(m, prod)
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Galois action zeta_n -> zeta_n^j for j coprime to the conductor.
    pub fn galois(&self, j: u32) -> Cyclotomic {
        let n = self.conductor;
        assert!(n.gcd(&(j % n + n)) == 1 || n == 1);
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * j as u64 % n as u64) as usize;
            coeffs[e] += c;
        }
        Cyclotomic::reduce(n, coeffs)
    }

    /// Complex conjugation zeta -> zeta^(-1).
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Lexicographic comparison of coefficient vectors after embedding into
    /// Q(zeta_ambient). Used for deterministic sorting; the ambient conductor
    /// must be a common multiple of both conductors.
    pub fn cmp_in(&self, other: &Cyclotomic, ambient: u32) -> core::cmp::Ordering {
        let a = self.embed(ambient);
        let b = other.embed(ambient);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            let ord = x.cmp(y);
            if ord != core::cmp::Ordering::Equal {
                return ord;
            }
        }
        core::cmp::Ordering::Equal
    }

    /// Text form with terms in descending exponent order, e.g. `z5^3 + z5^2 + 1`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let n = self.conductor;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = c.abs();
            let coef = format_rational(&a);
            if i == 0 {
                out.push_str(&coef);
            } else {
                if !a.is_one() {
                    out.push_str(&coef);
                    out.push('*');
                }
                if i == 1 {
                    out.push_str(&alloc::format!("z{n}"));
                } else {
                    out.push_str(&alloc::format!("z{n}^{i}"));
                }
            }
        }
        out
    }

    /// Parses the `format` grammar: signed terms `c`, `z<n>`, `z<n>^<e>`,
    /// `c*z<n>^<e>`; all roots in one literal must share the conductor.
    pub fn parse(text: &str) -> Result<Cyclotomic> {
        let cleaned: String = text.replace('\u{2212}', "-");
        let s = cleaned.trim();
        if s.is_empty() {
            return Err(Error::Parse(String::from("empty cyclotomic literal")));
        }
        // split into signed terms at top level
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut seen_any = false;
        for (idx, ch) in s.char_indices() {
            match ch {
                '+' | '-' if seen_any && !cur.trim().is_empty() => {
                    terms.push((sign, core::mem::take(&mut cur)));
                    sign = ch == '-';
                }
                '+' if !seen_any || cur.trim().is_empty() => {
                    if idx != 0 && cur.trim().is_empty() && seen_any {
                        return Err(Error::Parse(alloc::format!("bad term in `{text}`")));
                    }
                }
                '-' if cur.trim().is_empty() => {
                    sign = !sign;
                }
                _ => {
                    if !ch.is_whitespace() {
                        seen_any = true;
                    }
                    cur.push(ch);
                }
            }
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(alloc::format!("dangling sign in `{text}`")));
        }
        terms.push((sign, cur));

        let mut total = Cyclotomic::zero();
        for (neg, term) in terms {
            let t = term.trim();
            let mut value = Self::parse_term(t)?;
            if neg {
                value = value.neg();
            }
            total = total.add(&value);
        }
        Ok(total)
    }

    fn parse_term(t: &str) -> Result<Cyclotomic> {
        let bad = || Error::Parse(alloc::format!("bad cyclotomic term `{t}`"));
        if let Some(zpos) = t.find('z') {
            let (coef_part, root_part) = t.split_at(zpos);
            let coef_part = coef_part.trim().trim_end_matches('*').trim();
            let coef = if coef_part.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef_part)?
            };
            let rest = &root_part[1..];
            let (n_str, e_str) = match rest.find('^') {
                Some(p) => (&rest[..p], Some(&rest[p + 1..])),
                None => (rest, None),
            };
            let n: u32 = n_str.trim().parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            let e: i64 = match e_str {
                Some(s) => s.trim().parse().map_err(|_| bad())?,
                None => 1,
            };
            Ok(Cyclotomic::root_of_unity(n, e).scale(&coef))
        } else {
            Ok(Cyclotomic::from_rational(parse_rational(t)?))
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}
