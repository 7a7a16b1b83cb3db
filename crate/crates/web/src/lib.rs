//! Browser bindings. Every export takes plain strings and numbers and
//! returns a JSON string; failures come back as `{"error": "..."}`.

use serde_json::json;
use wasm_bindgen::prelude::*;
use yangian_core::glrep::Partition;
use yangian_core::pbw::{normal_order, GenIdx};
use yangian_core::report::{run_capelli, run_drinfeld, Params};
use yangian_core::{Error, Result};

/// Largest rank accepted by [`normal_order_json`].
pub const MAX_RANK: usize = 6;
/// Longest word accepted by [`normal_order_json`].
pub const MAX_WORD: usize = 8;

fn to_json(r: Result<String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string())
}

fn partition(s: &str) -> Result<Partition> {
    Partition::parse(s)
}

/// Skew diagram, `ν`, highest weight, Drinfeld polynomials and `ζ` word.
/// `m = 0` means "length of μ".
#[wasm_bindgen]
pub fn drinfeld_json(lambda: &str, mu: &str, n: usize, m: usize) -> String {
    to_json((|| {
        let params = Params {
            lambda: Some(partition(lambda)?),
            mu: Some(partition(mu)?),
            n: Some(n),
            m: (m > 0).then_some(m),
            ..Params::default()
        };
        Ok(run_drinfeld(&params)?.to_json())
    })())
}

/// Eigenvalue of the quantum determinant on the highest vector of `L(λ)`.
#[wasm_bindgen]
pub fn capelli_json(lambda: &str, n: usize) -> String {
    to_json((|| {
        let params = Params {
            lambda: Some(partition(lambda)?),
            n: Some(n),
            max_size: Some(200_000),
            ..Params::default()
        };
        Ok(run_capelli(&params)?.to_json())
    })())
}

/// Parses `E12 E21`, `E[1,2]*E[2,1]` and similar.
pub fn parse_word(word: &str) -> Result<Vec<GenIdx>> {
    let bad = |t: &str| Error::InvalidParameters(format!("cannot read generator {t:?}"));
    let mut depth = 0i32;
    let joined: String = word
        .chars()
        .filter(|&c| {
            depth += (c == '[') as i32 - (c == ']') as i32;
            !(depth > 0 && c.is_whitespace())
        })
        .collect();
    joined
        .split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let body = t.strip_prefix('E').or_else(|| t.strip_prefix('e')).ok_or_else(|| bad(t))?;
            let body = body.trim_start_matches('[').trim_end_matches(']');
            let (i, j) = match body.split_once(',') {
                Some((i, j)) => (i.trim().parse(), j.trim().parse()),
                None if body.len() == 2 => (body[..1].parse(), body[1..].parse()),
                None => return Err(bad(t)),
            };
            match (i, j) {
                (Ok(i), Ok(j)) => Ok(GenIdx::new(i, j)),
                _ => Err(bad(t)),
            }
        })
        .collect()
}

/// PBW normal form of a word in `U(gl(rank))`.
#[wasm_bindgen]
pub fn normal_order_json(word: &str, rank: usize) -> String {
    to_json((|| {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidParameters(format!("rank must be between 1 and {MAX_RANK}")));
        }
        let w = parse_word(word)?;
        if w.len() > MAX_WORD {
            return Err(Error::InvalidParameters(format!("at most {MAX_WORD} generators")));
        }
        let x = normal_order(&w, rank)?;
        let terms: Vec<_> = x
            .terms()
            .map(|(m, c)| json!({ "monomial": m.to_string(), "coefficient": c.to_string() }))
            .collect();
        Ok(json!({ "rank": rank, "text": x.to_string(), "terms": terms }).to_string())
    })())
}
