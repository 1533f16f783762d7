//! Text grammar for words, lamp configurations and wreath elements.
//!
//! ```text
//! word      := "1" | letter+
//! lampentry := word ":" elementId
//! config    := "{" [lampentry ("," lampentry)*] "}"
//! wreath    := config "|" word
//! ```
//!
//! Words are freely reduced on parse. Formatting goes through the `Display`
//! impls, which always produce the canonical form.

use crate::error::{Error, Result};
use crate::groups::{LampConfig, LampElement, Letter, ReducedWord, WreathElement, WreathProduct};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{c}', found '{x}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(x) => self.err(format!("unexpected trailing '{x}'")),
        }
    }

    fn word(&mut self, rank: usize) -> Result<ReducedWord> {
        let start = self.pos;
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(ReducedWord::identity(rank));
        }
        let mut letters = Vec::new();
        while let Some(letter) = self.peek().and_then(Letter::from_char) {
            if letter.generator() >= rank {
                return self.err(format!("generator '{letter}' out of range for rank {rank}"));
            }
            letters.push(letter);
            self.pos += 1;
        }
        if self.pos == start {
            return match self.peek() {
                Some(x) => self.err(format!("expected a word, found '{x}'")),
                None => self.err("expected a word, found end of input"),
            };
        }
        ReducedWord::reduce(rank, letters)
    }

    fn element_id(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a lamp element id");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse() {
            Ok(v) => Ok((start, v)),
            Err(_) => Err(Error::Parse { pos: start, msg: format!("lamp id {digits} too large") }),
        }
    }

    fn config(&mut self, wp: &WreathProduct) -> Result<LampConfig> {
        let rank = wp.base().rank();
        let order = wp.lamps().order();
        self.expect('{')?;
        let mut entries = Vec::new();
        if self.peek() == Some('}') {
            self.pos += 1;
            return Ok(LampConfig::new());
        }
        loop {
            let word = self.word(rank)?;
            self.expect(':')?;
            let (_, id) = self.element_id()?;
            if id == 0 {
                return Err(Error::IdentityLamp(word.to_string()));
            }
            if id as usize >= order {
                return Err(Error::LampOutOfRange { value: id, order });
            }
            entries.push((word, LampElement(id)));
            match self.peek() {
                Some(',') => self.pos += 1,
                Some('}') => {
                    self.pos += 1;
                    break;
                }
                Some(x) => return self.err(format!("expected ',' or '}}', found '{x}'")),
                None => return self.err("unterminated configuration"),
            }
        }
        LampConfig::from_entries(entries)
    }
}

/// Parse a word of the given rank.
pub fn parse_word(s: &str, rank: usize) -> Result<ReducedWord> {
    if rank == 0 || rank > crate::groups::MAX_RANK {
        return Err(Error::RankOutOfRange { rank, max: crate::groups::MAX_RANK });
    }
    let mut cur = Cursor::new(s);
    let w = cur.word(rank)?;
    cur.finish()?;
    Ok(w)
}

pub fn parse_config(s: &str, wp: &WreathProduct) -> Result<LampConfig> {
    let mut cur = Cursor::new(s);
    let c = cur.config(wp)?;
    cur.finish()?;
    Ok(c)
}

/// Parse `config|word`, e.g. `{1:1,a:1}|ab`.
pub fn parse_element(s: &str, wp: &WreathProduct) -> Result<WreathElement> {
    let mut cur = Cursor::new(s);
    let lamps = cur.config(wp)?;
    cur.expect('|')?;
    let position = cur.word(wp.base().rank())?;
    cur.finish()?;
    Ok(WreathElement::new(lamps, position))
}
