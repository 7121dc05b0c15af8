//! Textual words: generator indices separated by spaces or commas, each
//! optionally prefixed with `s`; `e` alone is the identity.

use crate::error::{Error, Result};

pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let bad = |reason: String| Error::Word {
        text: text.to_string(),
        reason,
    };
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(bad("empty word (use \"e\" for the identity)".into()));
    }
    if tokens == ["e"] {
        return Ok(Vec::new());
    }
    tokens
        .iter()
        .map(|t| {
            let digits = t.strip_prefix('s').unwrap_or(t);
            match digits.parse::<usize>() {
                Ok(i) if (1..=rank).contains(&i) => Ok(i),
                Ok(i) => Err(bad(format!("generator {i} is out of range 1..={rank}"))),
                Err(_) => Err(bad(format!("{t:?} is not a generator index"))),
            }
        })
        .collect()
}

/// `s2 s1 s3`, or `e` for the empty word.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}
