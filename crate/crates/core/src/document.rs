//! The line-based document format shared by every command: a context
//! header (`n`, `k`) followed by either generator lines (`G ...`) or
//! family lines (`S ...`). `#` starts a comment, blank lines are ignored,
//! directives are whitespace-separated, one per line.

use std::fmt;

use crate::error::{Error, Result};
use crate::sets::{GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily};

/// What a document carries, tagged by its line prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Generators(GeneratorCollection),
    Family(SetFamily),
}

/// A parsed and validated document. Formatting and reparsing yields the
/// same value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    context: GroundContext,
    payload: Payload,
}

impl InputDocument {
    pub fn generators(gc: GeneratorCollection) -> Self {
        Self {
            context: gc.context(),
            payload: Payload::Generators(gc),
        }
    }

    pub fn family(f: SetFamily) -> Self {
        Self {
            context: f.context(),
            payload: Payload::Family(f),
        }
    }

    pub fn context(&self) -> GroundContext {
        self.context
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.context.n())?;
        writeln!(f, "k {}", self.context.k())?;
        match &self.payload {
            Payload::Generators(gc) => {
                for g in gc.generators() {
                    write_elements(f, "G", g.elements())?;
                }
            }
            Payload::Family(fam) => {
                for m in fam.members() {
                    write_elements(f, "S", m.elements())?;
                }
            }
        }
        Ok(())
    }
}

fn write_elements(f: &mut fmt::Formatter<'_>, tag: &str, elements: &[u32]) -> fmt::Result {
    write!(f, "{tag}")?;
    for e in elements {
        write!(f, " {e}")?;
    }
    writeln!(f)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a document, reporting every problem with its line number. The
/// header must precede the set lines; `G` and `S` lines cannot be mixed; a
/// document with a header but no sets is the distinct "empty input" error.
pub fn parse_document(text: &str) -> Result<InputDocument> {
    let mut n: Option<u32> = None;
    let mut k: Option<u32> = None;
    let mut context: Option<GroundContext> = None;
    let mut generators: Vec<GeneratorSet> = Vec::new();
    let mut members: Vec<KSet> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().expect("nonempty line has a first token");
        match tag {
            "n" | "k" => {
                let value = parse_header_value(tag, &mut tokens, line_no)?;
                let slot = if tag == "n" { &mut n } else { &mut k };
                if slot.is_some() {
                    return Err(parse_err(line_no, format!("duplicate '{tag}' line")));
                }
                *slot = Some(value);
                if let (Some(n), Some(k)) = (n, k) {
                    context = Some(
                        GroundContext::new(n, k)
                            .map_err(|e| parse_err(line_no, e.to_string()))?,
                    );
                }
            }
            "G" | "S" => {
                let ctx = context.ok_or_else(|| {
                    parse_err(line_no, "set line before the 'n' and 'k' header")
                })?;
                let elements = parse_elements(&mut tokens, line_no)?;
                if tag == "G" {
                    if !members.is_empty() {
                        return Err(parse_err(line_no, "'G' line after 'S' lines"));
                    }
                    let g = GeneratorSet::new(elements, &ctx)
                        .map_err(|e| parse_err(line_no, e.to_string()))?;
                    if generators.contains(&g) {
                        return Err(parse_err(line_no, format!("duplicate set {g}")));
                    }
                    generators.push(g);
                } else {
                    if !generators.is_empty() {
                        return Err(parse_err(line_no, "'S' line after 'G' lines"));
                    }
                    let s = KSet::new(elements, &ctx)
                        .map_err(|e| parse_err(line_no, e.to_string()))?;
                    if members.contains(&s) {
                        return Err(parse_err(line_no, format!("duplicate set {s}")));
                    }
                    members.push(s);
                }
            }
            other => {
                return Err(parse_err(
                    line_no,
                    format!("unknown directive '{other}' (expected n, k, G, S or #)"),
                ));
            }
        }
    }

    if n.is_none() {
        return Err(Error::MissingHeader { what: "n" });
    }
    if k.is_none() {
        return Err(Error::MissingHeader { what: "k" });
    }
    let context = context.expect("header fully parsed");
    if !generators.is_empty() {
        Ok(InputDocument::generators(GeneratorCollection::new(
            context, generators,
        )?))
    } else if !members.is_empty() {
        Ok(InputDocument::family(SetFamily::new(context, members)?))
    } else {
        Err(Error::EmptyInput)
    }
}

fn parse_header_value<'a>(
    tag: &str,
    tokens: &mut impl Iterator<Item = &'a str>,
    line_no: usize,
) -> Result<u32> {
    let token = tokens
        .next()
        .ok_or_else(|| parse_err(line_no, format!("'{tag}' needs a value")))?;
    let value: u32 = token
        .parse()
        .map_err(|_| parse_err(line_no, format!("'{token}' is not a positive integer")))?;
    if tokens.next().is_some() {
        return Err(parse_err(line_no, format!("'{tag}' takes a single value")));
    }
    Ok(value)
}

fn parse_elements<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
    line_no: usize,
) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for token in tokens {
        out.push(
            token
                .parse()
                .map_err(|_| parse_err(line_no, format!("'{token}' is not a positive integer")))?,
        );
    }
    Ok(out)
}
