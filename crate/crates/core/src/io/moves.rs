use std::fmt::Write;

use super::{tokens, ParseError};
use crate::graph::FloodMove;

pub fn parse_moves(text: &str) -> Result<Vec<FloodMove>, ParseError> {
    let mut moves = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let line = i + 1;
        if toks.len() != 2 {
            return Err(ParseError::Syntax {
                line,
                column: toks[0].0,
                message: "move lines hold \"vertex color\"".into(),
            });
        }
        let field = |(column, tok): (usize, &str), what: &str| {
            tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                column,
                message: format!("expected {what}, found {tok:?}"),
            })
        };
        let vertex = field(toks[0], "vertex id")?;
        let color = field(toks[1], "color id")?;
        let color = u8::try_from(color).map_err(|_| ParseError::Syntax {
            line,
            column: toks[1].0,
            message: format!("color {color} exceeds 255"),
        })?;
        moves.push(FloodMove::new(vertex, color));
    }
    Ok(moves)
}

pub fn emit_moves(moves: &[FloodMove]) -> String {
    let mut out = String::new();
    for mv in moves {
        writeln!(out, "{} {}", mv.vertex, mv.color).unwrap();
    }
    out
}
