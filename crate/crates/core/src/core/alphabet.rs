//! Alphabets, words, and the level-to-symbol map shared by all machines.

use crate::{Error, Result};
use std::fmt;

/// The reserved end-marker delimiting the input on both sides. It is
/// excluded from every alphabet; machine files spell it with the key
/// `"@end"`.
pub const END_MARKER: char = '¢';

/// A single input symbol.
pub type Symbol = char;

/// Nonempty ordered set of symbols, excluding the end-marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Validation("alphabet must be nonempty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if *s == END_MARKER {
                return Err(Error::Validation(
                    "alphabet must not contain the end-marker".into(),
                ));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Validation(format!(
                    "duplicate alphabet symbol {s:?}"
                )));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.contains(&s)
    }

    /// Position of `s` in the alphabet order.
    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.symbols.iter().position(|x| *x == s)
    }

    /// Index of a symbol in `Σ̃ = Σ ∪ {¢}`, with the end-marker last.
    pub fn index_with_end(&self, s: Symbol) -> Option<usize> {
        if s == END_MARKER {
            Some(self.symbols.len())
        } else {
            self.index_of(s)
        }
    }
}

/// Finite sequence of symbols over some alphabet, possibly empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(s: &str) -> Self {
        Word(s.chars().collect())
    }

    /// A unary word `s^n`.
    pub fn repeated(s: Symbol, n: usize) -> Self {
        Word(vec![s; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Checks every symbol is a member of `alphabet`.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        for &s in &self.0 {
            if !alphabet.contains(s) {
                return Err(Error::SymbolNotInAlphabet(s));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A word framed as `¢w¢`, with the level-to-symbol map used by every
/// realtime model here.
///
/// The tape has length `n + 2`: position 1 is the left end-marker,
/// positions `2..n+1` hold the word, position `n + 2` is the right
/// end-marker. A transition taken from a computation-tree node at level
/// `i` reads tape position `⌊i/2⌋ + 1`, so each position is read by
/// exactly two consecutive levels and the tree has depth `2n + 4`.
#[derive(Debug, Clone)]
pub struct TapeView {
    word: Word,
}

impl TapeView {
    pub fn new(word: Word) -> Self {
        TapeView { word }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Tape length `n + 2`.
    pub fn tape_len(&self) -> usize {
        self.word.len() + 2
    }

    /// Total number of transition steps, `2(n + 2)`; equals the tree depth.
    pub fn depth(&self) -> usize {
        2 * self.tape_len()
    }

    /// Tape symbol at 1-based position `pos`.
    pub fn symbol_at_position(&self, pos: usize) -> Symbol {
        debug_assert!(pos >= 1 && pos <= self.tape_len());
        if pos == 1 || pos == self.tape_len() {
            END_MARKER
        } else {
            self.word.symbols()[pos - 2]
        }
    }

    /// Symbol read by a transition taken from a node at `level`.
    pub fn symbol_at_level(&self, level: usize) -> Symbol {
        debug_assert!(level < self.depth());
        self.symbol_at_position(level / 2 + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_duplicates_and_end_marker() {
        assert!(Alphabet::new(vec!['a', 'a']).is_err());
        assert!(Alphabet::new(vec!['a', END_MARKER]).is_err());
        assert!(Alphabet::new(vec![]).is_err());
        let a = Alphabet::new(vec!['b', 'a']).unwrap();
        assert_eq!(a.index_of('b'), Some(0));
        assert_eq!(a.index_with_end(END_MARKER), Some(2));
    }

    #[test]
    fn level_map_reads_each_position_twice() {
        // Word of length n: levels 0,1 read the left end-marker, levels
        // 2n+2, 2n+3 read the right one.
        for n in 0..6 {
            let tape = TapeView::new(Word::repeated('a', n));
            assert_eq!(tape.depth(), 2 * n + 4);
            assert_eq!(tape.symbol_at_level(0), END_MARKER);
            assert_eq!(tape.symbol_at_level(1), END_MARKER);
            assert_eq!(tape.symbol_at_level(2 * n + 2), END_MARKER);
            assert_eq!(tape.symbol_at_level(2 * n + 3), END_MARKER);
            for k in 1..=n {
                assert_eq!(tape.symbol_at_level(2 * k), 'a');
                assert_eq!(tape.symbol_at_level(2 * k + 1), 'a');
            }
        }
    }

    #[test]
    fn word_alphabet_check() {
        let a = Alphabet::new(vec!['0', '1']).unwrap();
        assert!(Word::from_str("0110").check_alphabet(&a).is_ok());
        assert!(matches!(
            Word::from_str("012").check_alphabet(&a),
            Err(Error::SymbolNotInAlphabet('2'))
        ));
    }
}
