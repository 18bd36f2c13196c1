//! Permutations, permutation groups, stabilizer chains, and structural
//! subgroup machinery.
//!
//! Points are 1-based throughout, matching cycle notation: a permutation of
//! degree n maps {1..n} to itself and is stored as its image vector. The
//! action is from the right, so `(p * q)` means "apply p, then q".

mod chain;
mod classes;
mod describe;
mod subgroups;

pub use chain::StabChain;
pub use classes::{ConjClass, ConjClassSet};
pub use describe::abelian_invariants_of_quotient;
pub use subgroups::SubgroupClass;

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::fpgrp::Word;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds from a 1-based image vector, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img == 0 || img > n {
                return Err(Error::Parse(alloc::format!("image {img} out of range 1..={n}")));
            }
            if seen[(img - 1) as usize] {
                return Err(Error::Parse(alloc::format!("image {img} repeated")));
            }
            seen[(img - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 1-based point.
    pub fn apply(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// Right-action composition: apply self first, then other.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[(x - 1) as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// h^-1 * self * h.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().mul(self).mul(h)
    }

    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = (self.images[x] - 1) as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &v)| v != *i as u32 + 1)
            .map(|(i, _)| i as u32 + 1)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0usize;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = (self.images[x] - 1) as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32 + 1);
                x = (self.images[x] - 1) as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle notation, `()` for the identity.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_owned();
        }
        let mut out = String::new();
        for cyc in cycles {
            out.push('(');
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&alloc::format!("{p}"));
            }
            out.push(')');
        }
        out
    }
}

/// Parses cycle notation: `()` or a product of cycles like `(1,3)(4,5)`.
/// Unlisted points are fixed; repeated points are rejected.
pub fn parse_cycles(text: &str, degree: u32) -> Result<Permutation> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty permutation".to_owned()));
    }
    let mut images: Vec<u32> = (1..=degree).collect();
    let mut used = vec![false; degree as usize];
    if s == "()" {
        return Ok(Permutation { images });
    }
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::Parse(alloc::format!("expected '(' in `{text}`")));
        }
        let close = s[pos..]
            .find(')')
            .ok_or_else(|| Error::Parse(alloc::format!("unbalanced '(' in `{text}`")))?
            + pos;
        let body = &s[pos + 1..close];
        if body.is_empty() {
            return Err(Error::Parse("empty cycle".to_owned()));
        }
        let mut cyc = Vec::new();
        for part in body.split(',') {
            let p: u32 = part
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad point `{part}`")))?;
            if p == 0 || p > degree {
                return Err(Error::Parse(alloc::format!("point {p} exceeds degree {degree}")));
            }
            if used[(p - 1) as usize] {
                return Err(Error::Parse(alloc::format!("point {p} repeated")));
            }
            used[(p - 1) as usize] = true;
            cyc.push(p);
        }
        if cyc.len() < 2 {
            return Err(Error::Parse("cycle needs at least two points".to_owned()));
        }
        for i in 0..cyc.len() {
            let from = cyc[i];
            let to = cyc[(i + 1) % cyc.len()];
            images[(from - 1) as usize] = to;
        }
        pos = close + 1;
    }
    Ok(Permutation { images })
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain and cached element and class data. Caches are observably pure:
/// concurrent initialization races produce identical values.
#[derive(Debug)]
pub struct PermGroup {
    degree: u32,
    gens: Vec<Permutation>,
    chain: OnceBox<StabChain>,
    elements: OnceBox<Vec<Permutation>>,
    classes: OnceBox<ConjClassSet>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let g = PermGroup::new_unchecked(self.degree, self.gens.clone());
        if let Some(c) = self.chain.get() {
            let _ = g.chain.set(Box::new(c.clone()));
        }
        if let Some(e) = self.elements.get() {
            let _ = g.elements.set(Box::new(e.clone()));
        }
        if let Some(c) = self.classes.get() {
            let _ = g.classes.set(Box::new(c.clone()));
        }
        g
    }
}

impl PermGroup {
    pub fn new(degree: u32, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Self::new_unchecked(degree, gens))
    }

    pub(crate) fn new_unchecked(degree: u32, gens: Vec<Permutation>) -> PermGroup {
        PermGroup {
            degree,
            gens,
            chain: OnceBox::new(),
            elements: OnceBox::new(),
            classes: OnceBox::new(),
        }
    }

    pub fn trivial(degree: u32) -> PermGroup {
        Self::new_unchecked(degree, Vec::new())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn stab_chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Box::new(StabChain::build(self.degree, &self.gens)))
    }

    pub fn order(&self) -> u128 {
        self.stab_chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.stab_chain().is_member(p))
    }

    pub fn is_subgroup(&self, candidate: &PermGroup) -> Result<bool> {
        if candidate.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: candidate.degree,
            });
        }
        for g in &candidate.gens {
            if !self.stab_chain().is_member(g) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A word in the generators evaluating to the given element.
    pub fn preimage_word(&self, p: &Permutation) -> Result<Word> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        self.stab_chain().preimage_word(p).ok_or(Error::NotInGroup)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.mul(b) != b.mul(a) {
                    return false;
                }
            }
        }
        true
    }

    /// All elements in breadth-first closure order from the identity,
    /// applying generators in order. Cached after the first call.
    pub fn elements(&self, cap: u64) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let elems = classes::enumerate_elements(self.degree, &self.gens, cap)?;
        Ok(self.elements.get_or_init(|| Box::new(elems)))
    }

    pub fn conjugacy_classes(&self, cap: u64) -> Result<&ConjClassSet> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let classes = classes::conjugacy_classes(self, cap)?;
        Ok(self.classes.get_or_init(|| Box::new(classes)))
    }

    /// Exponent: least common multiple of the element orders.
    pub fn exponent(&self, cap: u64) -> Result<u64> {
        let mut e = 1u64;
        for x in self.elements(cap)? {
            e = num_integer::lcm(e, x.order());
        }
        Ok(e)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        subgroups::derived_subgroup(self)
    }

    pub fn derived_series(&self) -> Vec<PermGroup> {
        subgroups::derived_series(self)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(|g| g.is_trivial())
            .unwrap_or(true)
    }

    /// Largest normal subgroup of `self` contained in `u`.
    pub fn core(&self, u: &PermGroup, cap: u64) -> Result<PermGroup> {
        subgroups::core(self, u, cap)
    }

    /// One representative per conjugacy class of subgroups.
    pub fn subgroup_classes(&self, order_cap: u64) -> Result<Vec<SubgroupClass>> {
        subgroups::subgroup_classes(self, order_cap)
    }

    pub fn describe(&self, cap: u64) -> Result<String> {
        describe::describe(self, cap)
    }

    /// Normal closure of the subgroup generated by `seeds` under `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        subgroups::normal_closure(self, seeds)
    }
}

impl PartialEq for PermGroup {
    /// Equality as subgroups of the symmetric group on the shared domain.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.gens.iter().all(|g| self.stab_chain().is_member(g))
    }
}

impl Eq for PermGroup {}

// --- constructors for the built-in catalog ---

pub fn cyclic_group(n: u32) -> PermGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let mut images: Vec<u32> = (2..=n).collect();
    images.push(1);
    PermGroup::new_unchecked(n, vec![Permutation { images }])
}

pub fn symmetric_group(n: u32) -> PermGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let transposition = parse_cycles("(1,2)", n).unwrap();
    if n == 2 {
        return PermGroup::new_unchecked(n, vec![transposition]);
    }
    let mut images: Vec<u32> = (2..=n).collect();
    images.push(1);
    PermGroup::new_unchecked(n, vec![transposition, Permutation { images }])
}

pub fn alternating_group(n: u32) -> PermGroup {
    assert!(n >= 1);
    if n <= 2 {
        return PermGroup::trivial(n.max(1));
    }
    let three_cycle = parse_cycles("(1,2,3)", n).unwrap();
    if n == 3 {
        return PermGroup::new_unchecked(n, vec![three_cycle]);
    }
    // (1,2,3) together with an n-cycle (n odd) or (2,..,n) (n even)
    let big = if n % 2 == 1 {
        let mut images: Vec<u32> = (2..=n).collect();
        images.push(1);
        Permutation { images }
    } else {
        let mut images: Vec<u32> = vec![1];
        images.extend(3..=n);
        images.push(2);
        Permutation { images }
    };
    PermGroup::new_unchecked(n, vec![three_cycle, big])
}

/// Dihedral group of order m as symmetries of the m/2-gon; for m = 4 the
/// Klein four-group on 4 points.
pub fn dihedral_group(m: u32) -> Result<PermGroup> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::Invalid(alloc::format!(
            "dihedral order must be an even number >= 4, got {m}"
        )));
    }
    let n = m / 2;
    if n == 2 {
        let a = parse_cycles("(1,2)", 4)?;
        let b = parse_cycles("(3,4)", 4)?;
        return PermGroup::new(4, vec![a, b]);
    }
    let mut rot_images: Vec<u32> = (2..=n).collect();
    rot_images.push(1);
    let rotation = Permutation { images: rot_images };
    // reflection through vertex 1: i -> 2 - i (mod n)
    let refl_images: Vec<u32> = (1..=n).map(|i| ((1 + n - i) % n) + 1).collect();
    let reflection = Permutation::from_images(refl_images)?;
    PermGroup::new(n, vec![rotation, reflection])
}

/// The quaternion group in its regular representation on 8 points.
pub fn quaternion_group() -> PermGroup {
    let i = parse_cycles("(1,2,3,4)(5,8,7,6)", 8).unwrap();
    let j = parse_cycles("(1,5,3,7)(2,6,4,8)", 8).unwrap();
    PermGroup::new_unchecked(8, vec![i, j])
}

/// SL(2,5) acting faithfully and transitively on the 24 nonzero vectors of
/// GF(5)^2, generated by [[0,-1],[1,0]] and [[1,1],[0,1]].
pub fn sl2_5() -> PermGroup {
    let vectors: Vec<(u64, u64)> = {
        let mut v = Vec::new();
        for a in 0..5u64 {
            for b in 0..5u64 {
                if (a, b) != (0, 0) {
                    v.push((a, b));
                }
            }
        }
        v
    };
    let index = |a: u64, b: u64| -> u32 {
        (vectors.iter().position(|&v| v == (a, b)).unwrap() + 1) as u32
    };
    let act = |m: [[u64; 2]; 2]| -> Permutation {
        let images: Vec<u32> = vectors
            .iter()
            .map(|&(a, b)| {
                let x = (a * m[0][0] + b * m[1][0]) % 5;
                let y = (a * m[0][1] + b * m[1][1]) % 5;
                index(x, y)
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let s = act([[0, 4], [1, 0]]);
    let t = act([[1, 1], [0, 1]]);
    PermGroup::new_unchecked(24, vec![s, t])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d10() -> PermGroup {
        let s1 = parse_cycles("(2,5)(3,4)", 5).unwrap();
        let s2 = parse_cycles("(1,3)(4,5)", 5).unwrap();
        PermGroup::new(5, vec![s1, s2]).unwrap()
    }

    #[test]
    fn parse_cycles_examples() {
        let p = parse_cycles("(1,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), &[3, 2, 1, 5, 4]);
        let id = parse_cycles("()", 4).unwrap();
        assert!(id.is_identity());
        assert!(parse_cycles("(1,2,2)", 3).is_err());
        assert!(parse_cycles("(1,7)", 5).is_err());
        assert!(parse_cycles("(1,2", 5).is_err());
    }

    #[test]
    fn pentagon_group_order_and_membership() {
        let g = d10();
        assert_eq!(g.order(), 10);
        let t = parse_cycles("(1,2)", 5).unwrap();
        assert!(!g.contains(&t).unwrap());
        assert!(g.contains(&Permutation::identity(5)).unwrap());
        // product of the generators is the 144-degree rotation, of order 5
        let prod = g.generators()[0].mul(&g.generators()[1]);
        assert_eq!(prod.order(), 5);
        assert!(g.contains(&prod).unwrap());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn s4_from_two_generators() {
        let g = PermGroup::new(
            4,
            vec![
                parse_cycles("(1,2)", 4).unwrap(),
                parse_cycles("(1,2,3,4)", 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn constructors_have_expected_orders() {
        assert_eq!(symmetric_group(5).order(), 120);
        assert_eq!(alternating_group(5).order(), 60);
        assert_eq!(alternating_group(4).order(), 12);
        assert_eq!(alternating_group(6).order(), 360);
        assert_eq!(cyclic_group(6).order(), 6);
        assert_eq!(dihedral_group(10).unwrap().order(), 10);
        assert_eq!(dihedral_group(4).unwrap().order(), 4);
        assert!(dihedral_group(5).is_err());
        assert_eq!(quaternion_group().order(), 8);
        assert_eq!(sl2_5().order(), 120);
    }

    #[test]
    fn dihedral_matches_pentagon_generators() {
        let g = dihedral_group(10).unwrap();
        // the paper's sigma_1 = (2,5)(3,4) must be the chosen reflection
        assert_eq!(g.generators()[1].format_cycles(), "(2,5)(3,4)");
        assert_eq!(g, d10());
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q8 = quaternion_group();
        let elems = q8.elements(100).unwrap();
        let involutions = elems.iter().filter(|p| p.order() == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn word_preimages_evaluate_back() {
        let g = d10();
        for x in g.elements(100).unwrap() {
            let w = g.preimage_word(x).unwrap();
            let back = w.evaluate_perms(g.degree(), g.generators()).unwrap();
            assert_eq!(&back, x);
        }
    }

    #[test]
    fn order_and_parity_helpers() {
        let c = parse_cycles("(1,2,3,4,5,6)", 6).unwrap();
        assert_eq!(c.order(), 6);
        assert!(!c.is_even());
        assert!(c.pow(2).is_even());
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.inverse().mul(&c), Permutation::identity(6));
    }
}
