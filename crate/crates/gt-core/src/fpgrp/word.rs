//! Freely reduced words in abstract generators.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word as a sequence of (generator index, nonzero exponent) syllables with
/// adjacent syllables on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i32)>,
}

impl Word {
    pub fn identity() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn generator(index: usize, exponent: i32) -> Word {
        if exponent == 0 {
            Word::identity()
        } else {
            Word {
                letters: alloc::vec![(index, exponent)],
            }
        }
    }

    pub fn from_letters(letters: Vec<(usize, i32)>) -> Word {
        let mut w = Word::identity();
        for (i, e) in letters {
            w.push(i, e);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of single-generator letters counted with multiplicity.
    pub fn length(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    fn push(&mut self, index: usize, exponent: i32) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == index {
                last.1 += exponent;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((index, exponent));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(i, e) in &other.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Net exponent of each generator, for abelianized computations.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut sums = alloc::vec![0i64; ngens];
        for &(i, e) in &self.letters {
            sums[i] += e as i64;
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(i, _)| i).max()
    }

    pub fn evaluate_perms(&self, degree: u32, gens: &[Permutation]) -> Result<Permutation> {
        let mut acc = Permutation::identity(degree);
        for &(i, e) in &self.letters {
            let g = gens.get(i).ok_or_else(|| {
                Error::Invalid(alloc::format!("word uses generator {i} beyond the supplied list"))
            })?;
            acc = acc.mul(&g.pow(e as i64));
        }
        Ok(acc)
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return String::from("id");
        }
        let mut out = String::new();
        for (k, &(i, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&names[i]);
            if e != 1 {
                out.push_str(&alloc::format!("^{e}"));
            }
        }
        out
    }
}

/// Recursive-descent parser for the word grammar:
/// `word := factor ('*' factor)*`, `factor := atom ('^' int)?`,
/// `atom := name | 'id' | '(' word ')' | '[' word ',' word ']'`,
/// with `[x,y] = x^-1 y^-1 x y`.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let mut parser = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        names,
    };
    let w = parser.word()?;
    if parser.pos != parser.chars.len() {
        return Err(Error::Parse(alloc::format!(
            "trailing input at position {} in `{text}`",
            parser.pos
        )));
    }
    Ok(w)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(alloc::format!(
                "expected `{c}` at position {}",
                self.pos
            )))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            w = w.concat(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            Ok(atom.pow(e))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(x.inverse().concat(&y.inverse()).concat(&x).concat(&y))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_alphanumeric() || c == '_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if let Some(i) = self.names.iter().position(|n| *n == name) {
                    Ok(Word::generator(i, 1))
                } else if name == "id" {
                    Ok(Word::identity())
                } else {
                    Err(Error::Parse(alloc::format!("unknown generator `{name}`")))
                }
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            other => Err(Error::Parse(alloc::format!(
                "unexpected token {other:?} at position {}",
                self.pos
            ))),
        }
    }

    fn integer(&mut self) -> Result<i32> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(alloc::format!("bad integer `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names() -> Vec<String> {
        alloc::vec!["a".to_string(), "b".to_string()]
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("(a*b)^5", &names()).unwrap();
        assert_eq!(w.length(), 10);

        let c = parse_word("[a,b]", &names()).unwrap();
        assert_eq!(
            c.letters(),
            &[(0, -1), (1, -1), (0, 1), (1, 1)]
        );

        let e = parse_word("a*a^-1", &names()).unwrap();
        assert!(e.is_identity());

        assert!(parse_word("c", &names()).is_err());
        assert!(parse_word("a**b", &names()).is_err());
        assert_eq!(parse_word("id", &names()).unwrap(), Word::identity());
    }

    #[test]
    fn inverse_and_concat_reduce() {
        let w = parse_word("a*b^2", &names()).unwrap();
        assert!(w.concat(&w.inverse()).is_identity());
        let v = parse_word("a^3", &names()).unwrap();
        assert_eq!(v.concat(&v.inverse()).length(), 0);
    }

    #[test]
    fn exponent_sums() {
        let w = parse_word("a*b^2*a^-3", &names()).unwrap();
        assert_eq!(w.exponent_sums(2), alloc::vec![-2, 2]);
    }

    #[test]
    fn evaluate_on_permutations() {
        use crate::perm::parse_cycles;
        let gens = [
            parse_cycles("(2,5)(3,4)", 5).unwrap(),
            parse_cycles("(1,3)(4,5)", 5).unwrap(),
        ];
        let w = parse_word("(a*b)^5", &names()).unwrap();
        let p = w.evaluate_perms(5, &gens).unwrap();
        assert!(p.is_identity());
    }
}
