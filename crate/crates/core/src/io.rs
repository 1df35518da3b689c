//! Native instance text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! tail head weight     (m lines, 0-indexed, weight `p`, `p/q` or a decimal)
//! ```
//!
//! Serialization writes weights in canonical `p` or `p/q` form, so writing a
//! parsed instance reproduces it byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Arc, WeightedDigraph};
use crate::rational::{format_rational, parse_rational};

pub fn parse_instance(text: &str) -> Result<WeightedDigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Format {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(Error::Format {
            line,
            message: format!("expected `n m`, got `{header}`"),
        });
    };
    let parse_count = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Format {
            line,
            message: format!("bad count `{s}`"),
        })
    };
    let (n, m) = (parse_count(n)?, parse_count(m)?);

    let mut arcs = Vec::with_capacity(m);
    for (line, body) in lines.by_ref() {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [tail, head, weight] = fields[..] else {
            return Err(Error::Format {
                line,
                message: format!("expected `tail head weight`, got `{body}`"),
            });
        };
        let vertex = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Format {
                line,
                message: format!("bad vertex id `{s}`"),
            })
        };
        arcs.push(Arc::new(
            vertex(tail)?,
            vertex(head)?,
            parse_rational(weight)?,
        ));
        if arcs.len() == m {
            break;
        }
    }
    if arcs.len() != m {
        return Err(Error::Format {
            line: 0,
            message: format!("header announces {m} arcs, found {}", arcs.len()),
        });
    }
    if let Some((line, extra)) = lines.next() {
        return Err(Error::Format {
            line,
            message: format!("unexpected trailing content `{extra}`"),
        });
    }
    WeightedDigraph::new(n, arcs)
}

pub fn write_instance(d: &WeightedDigraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", d.n(), d.m()).unwrap();
    for a in d.arcs() {
        writeln!(out, "{} {} {}", a.tail, a.head, format_rational(&a.weight)).unwrap();
    }
    out
}
