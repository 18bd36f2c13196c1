//! Deterministic Schreier-Sims stabilizer chains.
//!
//! Base points are the smallest moved points at level-creation time, orbits
//! are breadth-first with generators applied in order, and Schreier
//! generators are processed in discovery order, so transversal elements and
//! their words in the original generators are reproducible across runs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Permutation;
use crate::fpgrp::Word;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<(Permutation, Word)>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<u32>,
    /// For each orbit point x, an element (with word) mapping base to x.
    transversal: BTreeMap<u32, (Permutation, Word)>,
}

impl Level {
    fn new(base: u32) -> Level {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: BTreeMap::new(),
        }
    }

    fn recompute_orbit(&mut self, degree: u32) {
        self.orbit.clear();
        self.transversal.clear();
        let id = (Permutation::identity(degree), Word::identity());
        self.orbit.push(self.base);
        self.transversal.insert(self.base, id);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            let (ux, wx) = self.transversal.get(&x).unwrap().clone();
            for (g, wg) in &self.gens {
                let y = g.apply(x);
                if !self.transversal.contains_key(&y) {
                    let uy = ux.mul(g);
                    let wy = wx.concat(wg);
                    self.orbit.push(y);
                    self.transversal.insert(y, (uy, wy));
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: u32,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: u32, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let nonid: Vec<(Permutation, Word)> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_identity())
            .map(|(i, g)| (g.clone(), Word::generator(i, 1)))
            .collect();
        if nonid.is_empty() {
            return chain;
        }
        let base = nonid
            .iter()
            .filter_map(|(g, _)| g.smallest_moved_point())
            .min()
            .unwrap();
        let mut level0 = Level::new(base);
        level0.gens = nonid;
        level0.recompute_orbit(degree);
        chain.levels.push(level0);
        chain.close();
        chain
    }

    /// Verifies every level bottom-up: each Schreier generator must sift to
    /// identity through the chain below. A failing residue is appended as a
    /// strong generator to every level it stabilizes into, which strictly
    /// grows the orbit at the level where sifting got stuck, so the process
    /// terminates.
    fn close(&mut self) {
        let mut i: usize = 0;
        'outer: loop {
            let (orbit_len, gens_len) = {
                let l = &self.levels[i];
                (l.orbit.len(), l.gens.len())
            };
            for oi in 0..orbit_len {
                for gi in 0..gens_len {
                    let (x, (sg, sw)) = {
                        let l = &self.levels[i];
                        (l.orbit[oi], l.gens[gi].clone())
                    };
                    let (ux, uwx) = self.levels[i].transversal.get(&x).unwrap().clone();
                    let y = sg.apply(x);
                    let (uy, uwy) = self.levels[i].transversal.get(&y).unwrap().clone();
                    let schreier = ux.mul(&sg).mul(&uy.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let word = uwx.concat(&sw).concat(&uwy.inverse());
                    if let Some((r, rw, stuck)) = self.sift_with_word(i + 1, schreier, word) {
                        // r fixes all bases below `stuck`; register it there
                        if stuck == self.levels.len() {
                            let base = r.smallest_moved_point().unwrap();
                            self.levels.push(Level::new(base));
                        }
                        for l in i + 1..=stuck {
                            self.levels[l].gens.push((r.clone(), rw.clone()));
                            let degree = self.degree;
                            self.levels[l].recompute_orbit(degree);
                        }
                        i = stuck;
                        continue 'outer;
                    }
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }

    /// Sifts from the given level; returns the nonidentity residue, its word,
    /// and the level where sifting stopped, or None on success.
    fn sift_with_word(
        &self,
        from: usize,
        mut g: Permutation,
        mut w: Word,
    ) -> Option<(Permutation, Word, usize)> {
        let mut level = from;
        while level < self.levels.len() {
            if g.is_identity() {
                return None;
            }
            let l = &self.levels[level];
            let x = g.apply(l.base);
            match l.transversal.get(&x) {
                None => return Some((g, w, level)),
                Some((u, uw)) => {
                    g = g.mul(&u.inverse());
                    w = w.concat(&uw.inverse());
                }
            }
            level += 1;
        }
        if g.is_identity() {
            None
        } else {
            Some((g, w, self.levels.len()))
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn base_points(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn is_member(&self, p: &Permutation) -> bool {
        let mut g = p.clone();
        for l in &self.levels {
            if g.is_identity() {
                return true;
            }
            let x = g.apply(l.base);
            match l.transversal.get(&x) {
                None => return false,
                Some((u, _)) => g = g.mul(&u.inverse()),
            }
        }
        g.is_identity()
    }

    /// A word in the original generators evaluating to p, assembled from the
    /// transversal words along the sift.
    pub fn preimage_word(&self, p: &Permutation) -> Option<Word> {
        let mut g = p.clone();
        let mut parts: Vec<Word> = Vec::new();
        for l in &self.levels {
            if g.is_identity() {
                break;
            }
            let x = g.apply(l.base);
            let (u, uw) = l.transversal.get(&x)?;
            g = g.mul(&u.inverse());
            parts.push(uw.clone());
        }
        if !g.is_identity() {
            return None;
        }
        let mut word = Word::identity();
        for part in parts.iter().rev() {
            word = word.concat(part);
        }
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    #[test]
    fn chain_orders() {
        let gens = [
            parse_cycles("(1,2)", 4).unwrap(),
            parse_cycles("(1,2,3,4)", 4).unwrap(),
        ];
        let chain = StabChain::build(4, &gens);
        assert_eq!(chain.order(), 24);
    }

    #[test]
    fn alternating_five_has_order_sixty() {
        let gens = [
            parse_cycles("(1,2,3)", 5).unwrap(),
            parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        ];
        let chain = StabChain::build(5, &gens);
        assert_eq!(chain.order(), 60);
    }

    #[test]
    fn symmetric_six_order() {
        let gens = [
            parse_cycles("(1,2)", 6).unwrap(),
            parse_cycles("(1,2,3,4,5,6)", 6).unwrap(),
        ];
        let chain = StabChain::build(6, &gens);
        assert_eq!(chain.order(), 720);
    }

    #[test]
    fn base_points_are_smallest_moved() {
        let gens = [parse_cycles("(3,4,5)", 6).unwrap()];
        let chain = StabChain::build(6, &gens);
        assert_eq!(chain.base_points(), alloc::vec![3]);
    }

    #[test]
    fn membership_via_sift() {
        let gens = [
            parse_cycles("(2,5)(3,4)", 5).unwrap(),
            parse_cycles("(1,3)(4,5)", 5).unwrap(),
        ];
        let chain = StabChain::build(5, &gens);
        assert_eq!(chain.order(), 10);
        assert!(!chain.is_member(&parse_cycles("(1,2)", 5).unwrap()));
        assert!(chain.is_member(&parse_cycles("(1,3,5,2,4)", 5).unwrap()));
    }

    #[test]
    fn member_words_evaluate_back() {
        let gens = [
            parse_cycles("(1,2,3)", 5).unwrap(),
            parse_cycles("(3,4,5)", 5).unwrap(),
        ];
        let chain = StabChain::build(5, &gens);
        assert_eq!(chain.order(), 60);
        let g = parse_cycles("(1,3,5)", 5).unwrap();
        assert!(chain.is_member(&g));
        let w = chain.preimage_word(&g).unwrap();
        assert_eq!(w.evaluate_perms(5, &gens).unwrap(), g);
    }
}
