//! Weight-change event streams: one `<seq> <edge_id> <new_x>` per line,
//! with strictly increasing `seq`.

use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    /// 1-based source line, kept for error reporting.
    pub line: usize,
    pub seq: u64,
    pub edge: EdgeId,
    pub x: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EventError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: sequence number {seq} does not increase (previous {previous})")]
    NonIncreasing { line: usize, seq: u64, previous: u64 },
}

pub fn parse_events(text: &str) -> Result<Vec<Event>, EventError> {
    let mut events: Vec<Event> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0] == "c" {
            continue;
        }
        let bad = |message: String| EventError::Syntax { line, message };
        if toks.len() != 3 {
            return Err(bad(format!("expected `<seq> <edge_id> <new_x>`, got {} fields", toks.len())));
        }
        let seq: u64 = toks[0].parse().map_err(|_| bad(format!("invalid sequence number `{}`", toks[0])))?;
        let edge: EdgeId = toks[1].parse().map_err(|_| bad(format!("invalid edge id `{}`", toks[1])))?;
        let x: f64 = toks[2].parse().map_err(|_| bad(format!("invalid value `{}`", toks[2])))?;
        if !x.is_finite() {
            return Err(bad(format!("value `{}` is not finite", toks[2])));
        }
        if let Some(prev) = events.last() {
            if seq <= prev.seq {
                return Err(EventError::NonIncreasing { line, seq, previous: prev.seq });
            }
        }
        events.push(Event { line, seq, edge, x });
    }
    Ok(events)
}
