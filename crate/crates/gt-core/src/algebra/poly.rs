//! Dense univariate polynomials over a finite field.
//!
//! A polynomial is a `Vec<u64>` of element codes, ascending degree, with no
//! trailing zeros (the zero polynomial is the empty vector). Factorization
//! is Cantor-Zassenhaus with a caller-supplied deterministic RNG.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use rand_core::RngCore;

use super::ff::FiniteField;

pub type Poly = Vec<u64>;

pub fn normalize(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &Poly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn x_poly() -> Poly {
    vec![0, 1]
}

pub fn add(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let n = f.len().max(g.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = k.add(a, b);
    }
    normalize(out)
}

pub fn sub(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let neg: Poly = g.iter().map(|&c| k.neg(c)).collect();
    add(k, f, &neg)
}

pub fn mul(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            if b == 0 {
                continue;
            }
            out[i + j] = k.add(out[i + j], k.mul(a, b));
        }
    }
    normalize(out)
}

pub fn scale(k: &FiniteField, f: &Poly, c: u64) -> Poly {
    normalize(f.iter().map(|&a| k.mul(a, c)).collect())
}

/// Quotient and remainder; the divisor must be nonzero.
pub fn divrem(k: &FiniteField, f: &Poly, g: &Poly) -> (Poly, Poly) {
    assert!(!g.is_empty(), "polynomial division by zero");
    let dg = g.len() - 1;
    let lead_inv = k.inv(g[dg]);
    let mut rem = f.clone();
    if rem.len() <= dg {
        return (Vec::new(), normalize(rem));
    }
    let mut quot = vec![0u64; rem.len() - dg];
    for i in (dg..rem.len()).rev() {
        let c = k.mul(rem[i], lead_inv);
        if c == 0 {
            continue;
        }
        quot[i - dg] = c;
        for j in 0..=dg {
            let t = k.mul(g[j], c);
            rem[i - dg + j] = k.sub(rem[i - dg + j], t);
        }
    }
    (normalize(quot), normalize(rem))
}

pub fn rem(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    divrem(k, f, g).1
}

pub fn monic(k: &FiniteField, f: &Poly) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(&c) if c == 1 => f.clone(),
        Some(&c) => scale(k, f, k.inv(c)),
    }
}

pub fn gcd(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn derivative(k: &FiniteField, f: &Poly) -> Poly {
    if f.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(f.len() - 1);
    for (i, &c) in f.iter().enumerate().skip(1) {
        out.push(k.mul(c, k.from_int(i as i64)));
    }
    normalize(out)
}

pub fn eval(k: &FiniteField, f: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = k.add(k.mul(acc, x), c);
    }
    acc
}

/// base^e mod m with a u64 exponent.
pub fn pow_mod(k: &FiniteField, base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut b = rem(k, base, m);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(k, &mul(k, &acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = rem(k, &mul(k, &b, &b), m);
        }
    }
    acc
}

/// base^e mod m with an arbitrary-precision exponent.
pub fn pow_mod_big(k: &FiniteField, base: &Poly, e: &BigUint, m: &Poly) -> Poly {
    let b = rem(k, base, m);
    let mut acc = vec![1u64];
    if e.is_zero() {
        return acc;
    }
    for i in (0..e.bits()).rev() {
        acc = rem(k, &mul(k, &acc, &acc), m);
        if e.bit(i) {
            acc = rem(k, &mul(k, &acc, &b), m);
        }
    }
    acc
}

/// Irreducibility over the given field: x^(q^n) = x mod f and for each prime
/// t | n the power x^(q^(n/t)) - x is coprime to f.
pub fn is_irreducible(k: &FiniteField, f: &Poly) -> bool {
    let n = match degree(f) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let q = k.order();
    let x = x_poly();
    // x^(q^n) mod f by iterated q-th powering
    let mut frob = rem(k, &x, f);
    let mut frobs = Vec::with_capacity(n);
    for _ in 0..n {
        frob = pow_mod(k, &frob, q, f);
        frobs.push(frob.clone());
    }
    if sub(k, &frobs[n - 1], &rem(k, &x, f)) != Vec::<u64>::new() {
        return false;
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut t = 2;
    while t * t <= m {
        if m % t == 0 {
            primes.push(t);
            while m % t == 0 {
                m /= t;
            }
        }
        t += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for t in primes {
        let w = sub(k, &frobs[n / t - 1], &rem(k, &x, f));
        if degree(&gcd(k, f, &w)).map_or(false, |d| d > 0) {
            return false;
        }
    }
    true
}

fn random_poly_below(k: &FiniteField, deg: usize, rng: &mut dyn RngCore) -> Poly {
    let mut f = Vec::with_capacity(deg);
    for _ in 0..deg {
        let mut digits = 0u64;
        let mut scale = 1u64;
        for _ in 0..k.degree() {
            digits += (rng.next_u64() % k.characteristic()) * scale;
            scale *= k.characteristic();
        }
        f.push(digits);
    }
    normalize(f)
}

/// Splits a product of distinct irreducibles of equal degree d.
fn equal_degree_factor(
    k: &FiniteField,
    f: &Poly,
    d: usize,
    rng: &mut dyn RngCore,
    out: &mut Vec<Poly>,
) {
    let n = degree(f).unwrap();
    if n == d {
        out.push(monic(k, f));
        return;
    }
    let q = BigUint::from(k.order());
    loop {
        let h = random_poly_below(k, n, rng);
        if degree(&h).is_none() {
            continue;
        }
        let g = gcd(k, f, &h);
        let g = if degree(&g).map_or(false, |dg| dg > 0 && dg < n) {
            g
        } else if k.characteristic() == 2 {
            // trace map splitting in characteristic 2
            let m = d as u64 * k.degree() as u64;
            let mut tr = rem(k, &h, f);
            let mut pw = rem(k, &h, f);
            for _ in 1..m {
                pw = rem(k, &mul(k, &pw, &pw), f);
                tr = add(k, &tr, &pw);
            }
            gcd(k, f, &tr)
        } else {
            let e = (q.pow(d as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
            let w = pow_mod_big(k, &h, &e, f);
            let w1 = sub(k, &w, &vec![1]);
            gcd(k, f, &w1)
        };
        if let Some(dg) = degree(&g) {
            if dg > 0 && dg < n {
                let (rest, r) = divrem(k, f, &g);
                debug_assert!(r.is_empty());
                equal_degree_factor(k, &g, d, rng, out);
                equal_degree_factor(k, &rest, d, rng, out);
                return;
            }
        }
    }
}

/// Distinct-degree then equal-degree factorization of a squarefree monic f.
fn factor_squarefree(k: &FiniteField, f: &Poly, rng: &mut dyn RngCore) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut s = f.clone();
    let q = k.order();
    let x = x_poly();
    let mut w = rem(k, &x, &s);
    let mut d = 0usize;
    while let Some(ds) = degree(&s) {
        if ds == 0 {
            break;
        }
        d += 1;
        if 2 * d > ds {
            out.push(monic(k, &s));
            break;
        }
        w = pow_mod(k, &w, q, &s);
        let g = gcd(k, &s, &sub(k, &w, &rem(k, &x, &s)));
        if degree(&g).map_or(false, |dg| dg > 0) {
            equal_degree_factor(k, &g, d, rng, &mut out);
            let (quot, r) = divrem(k, &s, &g);
            debug_assert!(r.is_empty());
            s = quot;
            w = rem(k, &w, &s);
        }
    }
    out
}

/// p-th root of a polynomial with zero derivative: f(x) = g(x)^p.
fn pth_root(k: &FiniteField, f: &Poly) -> Poly {
    let p = k.characteristic() as usize;
    let mut g = Vec::new();
    let mut i = 0;
    while i < f.len() {
        // coefficient p-th root is Frobenius applied k-1 times
        let mut c = f[i];
        for _ in 1..k.degree() {
            c = k.pow(c, k.characteristic());
        }
        g.push(c);
        i += p;
    }
    normalize(g)
}

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficient codes) for determinism.
pub fn factor(k: &FiniteField, f: &Poly, rng: &mut dyn RngCore) -> Vec<(Poly, usize)> {
    let mut found: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![(monic(k, f), 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if matches!(degree(&g), None | Some(0)) {
            continue;
        }
        let gp = derivative(k, &g);
        if gp.is_empty() {
            stack.push((pth_root(k, &g), mult * k.characteristic() as usize));
            continue;
        }
        let rep = gcd(k, &g, &gp);
        let sqfree = divrem(k, &g, &rep).0;
        let irrs = factor_squarefree(k, &sqfree, rng);
        let mut remaining = g.clone();
        for h in irrs {
            let mut m = 0usize;
            loop {
                let (quot, r) = divrem(k, &remaining, &h);
                if r.is_empty() && !quot.is_empty() {
                    remaining = quot;
                    m += 1;
                } else {
                    break;
                }
            }
            if m > 0 {
                found.push((h, m * mult));
            }
        }
        if degree(&remaining).map_or(false, |d| d > 0) {
            stack.push((remaining, mult));
        }
    }
    // merge duplicates and sort
    found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let mut merged: Vec<(Poly, usize)> = Vec::new();
    for (h, m) in found {
        if let Some(last) = merged.last_mut() {
            if last.0 == h {
                last.1 += m;
                continue;
            }
        }
        merged.push((h, m));
    }
    merged
}

/// Roots in the base field, sorted ascending, with multiplicity collapsed.
pub fn roots(k: &FiniteField, f: &Poly, rng: &mut dyn RngCore) -> Vec<u64> {
    let mut out: Vec<u64> = factor(k, f, rng)
        .into_iter()
        .filter(|(h, _)| h.len() == 2)
        .map(|(h, _)| k.neg(h[0]))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
