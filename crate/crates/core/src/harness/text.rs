//! Line-oriented text format.
//!
//! ```text
//! # comment
//! events 4
//! rel 0 1
//! rel 1 2
//! chain P 0 1 2 : 0 1 3/2
//! ```

use std::fmt::Write as _;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::poset::{build_poset, EventId, Poset};
use crate::Rational;

#[derive(Debug, Clone)]
pub struct Document {
    pub poset: Poset,
    pub chains: Vec<ValuedChain>,
}

struct PendingChain {
    line: usize,
    name: String,
    elements: Vec<EventId>,
    values: Vec<Rational>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_text(input: &str) -> Result<Document> {
    let mut count: Option<usize> = None;
    let mut relations = Vec::new();
    let mut pending: Vec<PendingChain> = Vec::new();

    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().expect("non-empty line");
        let id = |w: Option<&str>| -> Result<EventId> {
            let w = w.ok_or_else(|| parse_err(line, "missing event id"))?;
            w.parse::<usize>()
                .map(EventId)
                .map_err(|_| parse_err(line, format!("`{w}` is not an event id")))
        };
        match keyword {
            "events" => {
                if count.is_some() {
                    return Err(parse_err(line, "duplicate `events` header"));
                }
                let w = words
                    .next()
                    .ok_or_else(|| parse_err(line, "missing event count"))?;
                let n = w
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, format!("`{w}` is not an event count")))?;
                count = Some(n);
            }
            "rel" => {
                let n = count.ok_or_else(|| parse_err(line, "`rel` before `events` header"))?;
                let (a, b) = (id(words.next())?, id(words.next())?);
                for e in [a, b] {
                    if e.0 >= n {
                        return Err(parse_err(line, format!("event {e} is out of range")));
                    }
                }
                relations.push((a, b));
            }
            "chain" => {
                count.ok_or_else(|| parse_err(line, "`chain` before `events` header"))?;
                let name = words
                    .next()
                    .ok_or_else(|| parse_err(line, "missing chain name"))?
                    .to_string();
                let rest: Vec<&str> = words.by_ref().collect();
                let colon = rest
                    .iter()
                    .position(|&w| w == ":")
                    .ok_or_else(|| parse_err(line, "chain line needs `:` before the values"))?;
                let elements = rest[..colon]
                    .iter()
                    .map(|w| id(Some(w)))
                    .collect::<Result<Vec<_>>>()?;
                let values = rest[colon + 1..]
                    .iter()
                    .map(|w| {
                        w.parse::<Rational>()
                            .map_err(|_| parse_err(line, format!("`{w}` is not a rational")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if pending.iter().any(|c| c.name == name) {
                    return Err(parse_err(line, format!("duplicate chain `{name}`")));
                }
                pending.push(PendingChain {
                    line,
                    name,
                    elements,
                    values,
                });
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
        if words.next().is_some() {
            return Err(parse_err(line, "trailing input"));
        }
    }

    let n = count.ok_or_else(|| parse_err(0, "missing `events` header"))?;
    let poset = build_poset(n, &relations)?;
    let chains = pending
        .into_iter()
        .map(|c| {
            Chain::new(&poset, c.elements)
                .and_then(|ch| ValuedChain::new(ch.named(c.name), c.values))
                .map_err(|e| parse_err(c.line, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Document { poset, chains })
}

/// Writes cover edges and chains; parsing the output gives the same closure.
pub fn to_text(poset: &Poset, chains: &[ValuedChain]) -> String {
    let mut out = String::new();
    writeln!(out, "events {}", poset.event_count()).unwrap();
    for (a, b) in poset.cover_edges() {
        writeln!(out, "rel {a} {b}").unwrap();
    }
    for c in chains {
        let ids: Vec<String> = c.elements().iter().map(|e| e.to_string()).collect();
        let vals: Vec<String> = c.values().iter().map(|v| v.to_string()).collect();
        writeln!(
            out,
            "chain {} {} : {}",
            c.name(),
            ids.join(" "),
            vals.join(" ")
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sample() {
        let doc = parse_text(
            "# three events\nevents 3\nrel 0 1\nrel 1 2 # trailing comment\nchain P 0 1 2 : 0 1/2 2\n",
        )
        .unwrap();
        assert!(doc.poset.leq(EventId(0), EventId(2)).unwrap());
        assert_eq!(doc.chains[0].name(), "P");
        assert_eq!(doc.chains[0].value(1), Rational::new(1, 2));
    }

    #[test]
    fn rejects_unknown_keyword() {
        let err = parse_text("events 2\nedge 0 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "unknown keyword `edge`".into()
            }
        );
    }

    #[test]
    fn reports_bad_chains_with_line() {
        let err = parse_text("events 2\nchain P 1 0 : 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_text("rel 0 1\n").is_err());
        assert!(parse_text("events 2\nrel 0 5\n").is_err());
    }

    #[test]
    fn round_trip() {
        let doc = parse_text("events 4\nrel 0 1\nrel 1 2\nrel 0 2\nrel 0 3\nchain P 0 1 : 0 1\n")
            .unwrap();
        let again = parse_text(&to_text(&doc.poset, &doc.chains)).unwrap();
        assert!(again.poset.same_closure(&doc.poset));
        assert_eq!(again.chains, doc.chains);
    }
}
