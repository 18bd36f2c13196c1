//! Finite fields GF(p^k) with deterministic construction.
//!
//! Elements are stored as `u64` codes: the base-p digit expansion of the
//! code gives the coefficients of the polynomial residue. The defining
//! irreducible for GF(p^k) is the lexicographically smallest monic
//! irreducible of degree k over GF(p), coefficients compared low-degree
//! first, so the field is identical across runs. All element operations go
//! through the field descriptor.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::poly;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    /// Defining monic irreducible, coefficient codes ascending, length k+1.
    /// For k = 1 this is x itself and is never used in arithmetic.
    modulus: Vec<u64>,
    primitive: u64,
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<FiniteField> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::Invalid(alloc::format!("extension degree {k} < 1")));
        }
        let q = p
            .checked_pow(k)
            .filter(|q| *q < (1u64 << 62))
            .ok_or_else(|| Error::Invalid(alloc::format!("field size {p}^{k} too large")))?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, k)?
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            primitive: 0,
        };
        field.primitive = field.find_primitive();
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// A fixed generator of the multiplicative group: the first element in
    /// code order with multiplicative order q - 1.
    pub fn primitive_element(&self) -> u64 {
        self.primitive
    }

    fn find_primitive(&self) -> u64 {
        let factors = prime_factors(self.q - 1);
        'outer: for a in 1..self.q {
            let a = self.canon(a);
            for r in &factors {
                if self.pow(a, (self.q - 1) / r) == 1 {
                    continue 'outer;
                }
            }
            return a;
        }
        1
    }

    /// Remaps an arbitrary u64 into a valid code (digits reduced mod p).
    fn canon(&self, a: u64) -> u64 {
        if self.k == 1 {
            a % self.p
        } else {
            a // codes enumerate valid digit vectors only when a < q
        }
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn decode(&self, mut a: u64) -> Vec<u64> {
        let mut digits = vec![0u64; self.k as usize];
        for d in digits.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        debug_assert_eq!(a, 0, "element code out of range");
        digits
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut a = 0u64;
        for &d in digits.iter().rev() {
            a = a * self.p + d % self.p;
        }
        a
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let x = self.decode(a);
        let y = self.decode(b);
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let x = self.decode(a);
        let neg: Vec<u64> = x.iter().map(|u| (self.p - u % self.p) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let x = self.decode(a);
        let y = self.decode(b);
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &u) in x.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + (u as u128 * v as u128 % self.p as u128) as u64)
                    % self.p;
            }
        }
        // reduce modulo the defining polynomial
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let m = self.modulus[j] % self.p;
                let t = (c as u128 * m as u128 % self.p as u128) as u64;
                prod[i - k + j] = (prod[i - k + j] + self.p - t) % self.p;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "division by zero in GF({})", self.q);
        self.pow(a, self.q - 2)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn element_order(&self, a: u64) -> u64 {
        assert!(a != 0);
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// Discrete logarithm with respect to the primitive element.
    pub fn discrete_log(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut acc = 1u64;
        for t in 0..self.q - 1 {
            if acc == a {
                return Some(t);
            }
            acc = self.mul(acc, self.primitive);
        }
        None
    }

    /// An element of multiplicative order n; requires n | q - 1.
    pub fn root_of_unity(&self, n: u64) -> Result<u64> {
        if n == 0 || (self.q - 1) % n != 0 {
            return Err(Error::Invalid(alloc::format!(
                "no {n}-th roots of unity in GF({})",
                self.q
            )));
        }
        Ok(self.pow(self.primitive, (self.q - 1) / n))
    }

    /// Some n-th root of a, searched via discrete logs, if one exists.
    pub fn nth_root(&self, a: u64, n: u64) -> Option<u64> {
        if a == 0 {
            return Some(0);
        }
        let t = self.discrete_log(a)?;
        let g = gcd_u64(n, self.q - 1);
        if t % g != 0 {
            return None;
        }
        // solve n*s = t (mod q-1)
        let m = (self.q - 1) / g;
        let n_red = (n / g) % m;
        let t_red = (t / g) % m;
        let inv = mod_inverse(n_red, m)?;
        let s = (t_red as u128 * inv as u128 % m as u128) as u64;
        Some(self.pow(self.primitive, s))
    }

    /// All text forms are coefficient lists `c0+c1*t+...` for extensions and
    /// plain integers for prime fields.
    pub fn format_element(&self, a: u64) -> alloc::string::String {
        if self.k == 1 {
            return alloc::format!("{a}");
        }
        let digits = self.decode(a);
        let mut out = alloc::string::String::new();
        let mut first = true;
        for (i, d) in digits.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            if !first {
                out.push('+');
            }
            first = false;
            match i {
                0 => out.push_str(&alloc::format!("{d}")),
                1 if *d == 1 => out.push('t'),
                1 => out.push_str(&alloc::format!("{d}*t")),
                _ if *d == 1 => out.push_str(&alloc::format!("t^{i}")),
                _ => out.push_str(&alloc::format!("{d}*t^{i}")),
            }
        }
        if first {
            out.push('0');
        }
        out
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
    }

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// candidate constant terms varying slowest.
fn find_irreducible(p: u64, k: u32) -> Result<Vec<u64>> {
    let base = FiniteField::new(p, 1)?;
    let k = k as usize;
    let mut coeffs = vec![0u64; k]; // c_0 .. c_{k-1}
    loop {
        let mut f: Vec<u64> = coeffs.clone();
        f.push(1);
        if poly::is_irreducible(&base, &f) {
            return Ok(f);
        }
        // odometer: increment the highest degree coefficient fastest so the
        // low-degree-first comparison order is respected
        let mut pos = k;
        loop {
            if pos == 0 {
                return Err(Error::Internal(alloc::string::String::from(
                    "no irreducible polynomial found",
                )));
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
        }
    }
}

/// Embedding of GF(p^k) into GF(p^(k*m)) determined by the first root of the
/// small field's defining polynomial in code order.
pub struct FieldEmbedding {
    theta_pows: Vec<u64>,
    from_p: u64,
    from_k: u32,
}

impl FieldEmbedding {
    pub fn new(from: &FiniteField, to: &FiniteField) -> Result<FieldEmbedding> {
        if from.p != to.p || to.k % from.k != 0 {
            return Err(Error::Invalid(alloc::string::String::from(
                "no embedding between these fields",
            )));
        }
        if from.k == 1 {
            return Ok(FieldEmbedding {
                theta_pows: vec![to.one()],
                from_p: from.p,
                from_k: 1,
            });
        }
        let theta = (0..to.q)
            .find(|&t| poly::eval(to, &from.modulus.iter().map(|&c| c).collect::<Vec<_>>(), t) == 0)
            .ok_or_else(|| Error::Internal(alloc::string::String::from("no root for embedding")))?;
        let mut theta_pows = vec![to.one()];
        for _ in 1..from.k {
            let last = *theta_pows.last().unwrap();
            theta_pows.push(to.mul(last, theta));
        }
        Ok(FieldEmbedding {
            theta_pows,
            from_p: from.p,
            from_k: from.k,
        })
    }

    pub fn map(&self, to: &FiniteField, a: u64) -> u64 {
        let mut digits = Vec::with_capacity(self.from_k as usize);
        let mut x = a;
        for _ in 0..self.from_k {
            digits.push(x % self.from_p);
            x /= self.from_p;
        }
        let mut acc = to.zero();
        for (i, d) in digits.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            acc = to.add(acc, to.mul(to.from_int(*d as i64), self.theta_pows[i]));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf7_primitive_is_three() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.primitive_element(), 3);
        assert_eq!(f.element_order(3), 6);
    }

    #[test]
    fn gf2_primitive_is_one() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.primitive_element(), 1);
    }

    #[test]
    fn gf13_has_order_twelve_element() {
        let f = FiniteField::new(13, 1).unwrap();
        assert_eq!(f.element_order(f.primitive_element()), 12);
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(FiniteField::new(6, 1).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn gf9_defining_polynomial_is_lex_smallest() {
        // x^2 + 1 is irreducible over GF(3) and (1,0) is lexicographically
        // first among (c0, c1) giving irreducible x^2 + c1 x + c0
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.order(), 9);
        assert_eq!(f.element_order(f.primitive_element()), 8);
    }

    #[test]
    fn gf4_arithmetic() {
        let f = FiniteField::new(2, 2).unwrap();
        // x^2 + x + 1 is the only irreducible quadratic
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = 2u64; // the class of x
        assert_eq!(f.mul(t, t), f.add(t, 1)); // t^2 = t + 1
        for a in 1..4 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn roots_of_unity_and_nth_roots() {
        let f = FiniteField::new(13, 1).unwrap();
        let z3 = f.root_of_unity(3).unwrap();
        assert_eq!(f.element_order(z3), 3);
        let r = f.nth_root(12, 2);
        if let Some(r) = r {
            assert_eq!(f.mul(r, r), 12);
        }
        // 2 generates GF(13)*, so quadratic nonresidues have no square root
        assert!(f.nth_root(2, 2).is_none());
    }

    #[test]
    fn embedding_is_a_field_hom() {
        let small = FiniteField::new(3, 1).unwrap();
        let big = FiniteField::new(3, 2).unwrap();
        let emb = FieldEmbedding::new(&small, &big).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let lhs = emb.map(&big, small.mul(a, b));
                let rhs = big.mul(emb.map(&big, a), emb.map(&big, b));
                assert_eq!(lhs, rhs);
                let lhs = emb.map(&big, small.add(a, b));
                let rhs = big.add(emb.map(&big, a), emb.map(&big, b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
