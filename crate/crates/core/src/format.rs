//! APX and TGF reading and writing, plus DOT export.
//!
//! APX: `arg(<name>).` and `att(<a>,<b>).` statements, one per line,
//! whitespace-insensitive, `#` starts a comment line. TGF: argument names
//! one per line, a line containing only `#`, then `a b` attack lines.
//!
//! Writers order arguments and attacks lexicographically so output is
//! byte-stable. Readers only accept plain names.

use std::fmt::Write as _;

use crate::af::{is_valid_plain_name, Af, ArgumentId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Apx,
    Tgf,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            other => Err(Error::BadParameter(format!("unknown format `{other}`"))),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Af> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
    }
}

pub fn serialize(af: &Af, format: Format) -> String {
    match format {
        Format::Apx => serialize_apx(af),
        Format::Tgf => serialize_tgf(af),
    }
}

fn name_at(raw: &str, line: usize) -> Result<ArgumentId> {
    if raw.is_empty()
        || !raw
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
    {
        return Err(Error::Syntax {
            line,
            message: format!("invalid argument name `{raw}`"),
        });
    }
    if !is_valid_plain_name(raw) {
        return Err(Error::ReservedName {
            line: Some(line),
            name: raw.to_owned(),
        });
    }
    ArgumentId::plain(raw)
}

fn build(
    args: Vec<ArgumentId>,
    attacks: Vec<(ArgumentId, ArgumentId, usize)>,
    last_line: usize,
) -> Result<Af> {
    let declared: std::collections::HashSet<&ArgumentId> = args.iter().collect();
    for (a, b, line) in &attacks {
        for x in [a, b] {
            if !declared.contains(x) {
                return Err(Error::Syntax {
                    line: *line,
                    message: format!("attack uses undeclared argument `{x}`"),
                });
            }
        }
    }
    if args.is_empty() {
        return Err(Error::Syntax {
            line: last_line,
            message: "no arguments declared".into(),
        });
    }
    Af::new(
        args.clone(),
        attacks.into_iter().map(|(a, b, _)| (a, b)),
    )
}

pub fn parse_apx(text: &str) -> Result<Af> {
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    let mut last = 0;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        last = line;
        let stmt: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if stmt.is_empty() || stmt.starts_with('#') {
            continue;
        }
        let syntax = |message: &str| Error::Syntax {
            line,
            message: message.to_owned(),
        };
        let body = stmt
            .strip_suffix(").")
            .ok_or_else(|| syntax("statement must end with `).`"))?;
        if let Some(name) = body.strip_prefix("arg(") {
            args.push(name_at(name, line)?);
        } else if let Some(pair) = body.strip_prefix("att(") {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| syntax("expected `att(<a>,<b>).`"))?;
            attacks.push((name_at(a, line)?, name_at(b, line)?, line));
        } else {
            return Err(syntax("expected `arg(...)` or `att(...)`"));
        }
    }
    build(args, attacks, last)
}

pub fn serialize_apx(af: &Af) -> String {
    let mut out = String::new();
    for a in af.args() {
        let _ = writeln!(out, "arg({a}).");
    }
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "att({a},{b}).");
    }
    out
}

pub fn parse_tgf(text: &str) -> Result<Af> {
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    let mut in_attacks = false;
    let mut last = 0;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        last = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_attacks {
                return Err(Error::Syntax {
                    line,
                    message: "second `#` separator".into(),
                });
            }
            in_attacks = true;
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if in_attacks {
            match fields.as_slice() {
                [a, b] => attacks.push((name_at(a, line)?, name_at(b, line)?, line)),
                _ => {
                    return Err(Error::Syntax {
                        line,
                        message: "expected `<a> <b>`".into(),
                    })
                }
            }
        } else {
            match fields.as_slice() {
                [a] => args.push(name_at(a, line)?),
                _ => {
                    return Err(Error::Syntax {
                        line,
                        message: "expected a single argument name".into(),
                    })
                }
            }
        }
    }
    build(args, attacks, last)
}

pub fn serialize_tgf(af: &Af) -> String {
    let mut out = String::new();
    for a in af.args() {
        let _ = writeln!(out, "{a}");
    }
    out.push_str("#\n");
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Graphviz rendering of a framework.
pub fn to_dot(af: &Af) -> String {
    let mut out = String::from("digraph af {\n");
    for a in af.args() {
        let _ = writeln!(out, "  \"{a}\";");
    }
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
    }
    out.push_str("}\n");
    out
}
