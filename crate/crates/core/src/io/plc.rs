use std::fmt::Write;

use super::{content_lines, parse_usize, IoError};
use crate::complex::{validate_standard, NormalRecord, StandardComplex};
use crate::exact::{parse_scalar, Vector};
use crate::normals::TraditionalComplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlcDocument {
    Standard(StandardComplex),
    Traditional(TraditionalComplex),
}

struct Cursor<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0)
    }

    fn header(&mut self, key: &str) -> Result<(usize, Vec<&'a str>), IoError> {
        let Some((line, tokens)) = self.lines.get(self.pos).cloned() else {
            return Err(IoError::parse(self.last_line(), format!("missing `{key}` line")));
        };
        if tokens[0] != key {
            return Err(IoError::parse(line, format!("expected `{key}`, found `{}`", tokens[0])));
        }
        self.pos += 1;
        Ok((line, tokens[1..].to_vec()))
    }

    fn count(&mut self, key: &str) -> Result<usize, IoError> {
        let (line, rest) = self.header(key)?;
        match rest.as_slice() {
            [n] => parse_usize(line, n),
            _ => Err(IoError::parse(line, format!("`{key}` takes one value"))),
        }
    }
}

fn vector(line: usize, tokens: &[&str], dim: usize) -> Result<Vector, IoError> {
    if tokens.len() != dim {
        return Err(IoError::parse(line, format!("expected {dim} coordinates, found {}", tokens.len())));
    }
    let coords = tokens
        .iter()
        .map(|t| parse_scalar(t).ok_or_else(|| IoError::parse(line, format!("bad number `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Vector::new(coords))
}

fn pair(line: usize, tokens: &[&str]) -> Result<(usize, usize), IoError> {
    match tokens {
        [a, b] => Ok((parse_usize(line, a)?, parse_usize(line, b)?)),
        _ => Err(IoError::parse(line, "expected two indices")),
    }
}

/// Parses a PLC document and validates the complex it describes.
pub fn parse_plc(text: &str) -> Result<PlcDocument, IoError> {
    let mut cur = Cursor { lines: content_lines(text).collect(), pos: 0 };
    let (line, version) = cur.header("plc")?;
    if version != ["1"] {
        return Err(IoError::parse(line, "unsupported version, expected `plc 1`"));
    }
    let dim = cur.count("dim")?;
    if dim < 3 {
        return Err(IoError::invalid(None, format!("ambient dimension {dim} is below 3")));
    }
    let (line, form) = cur.header("form")?;
    match form.as_slice() {
        ["standard"] => parse_standard(&mut cur, dim).map(PlcDocument::Standard),
        ["traditional"] => parse_traditional(&mut cur, dim).map(PlcDocument::Traditional),
        _ => Err(IoError::parse(line, "form must be `standard` or `traditional`")),
    }
}

fn parse_standard(cur: &mut Cursor<'_>, dim: usize) -> Result<StandardComplex, IoError> {
    let mut c = StandardComplex {
        dim,
        num_corners: cur.count("corners")?,
        num_ridges: cur.count("ridges")?,
        num_facets: cur.count("facets")?,
        ridge_facets: Vec::new(),
        corner_ridges: Vec::new(),
        corner_facets: Vec::new(),
        ridge_normals: Vec::new(),
        facet_normals: Vec::new(),
    };
    for (line, tokens) in &cur.lines[cur.pos..] {
        let line = *line;
        let rest = &tokens[1..];
        match tokens[0] {
            "rf" => c.ridge_facets.push(pair(line, rest)?),
            "cr" => c.corner_ridges.push(pair(line, rest)?),
            "cf" => c.corner_facets.push(pair(line, rest)?),
            key @ ("rn" | "fn") => {
                if rest.len() < 2 {
                    return Err(IoError::parse(line, "normal needs corner, cell and coordinates"));
                }
                let (corner, cell) = pair(line, &rest[..2])?;
                let record = NormalRecord { corner, cell, vector: vector(line, &rest[2..], dim)? };
                if key == "rn" {
                    c.ridge_normals.push(record);
                } else {
                    c.facet_normals.push(record);
                }
            }
            other => return Err(IoError::parse(line, format!("unknown record `{other}`"))),
        }
    }
    validate_standard(c.clone()).map_err(|e| IoError::invalid(None, e.to_string()))?;
    Ok(c)
}

fn parse_traditional(cur: &mut Cursor<'_>, dim: usize) -> Result<TraditionalComplex, IoError> {
    let nv = cur.count("vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    let (mut corners, mut ridges, mut facets) = (Vec::new(), Vec::new(), Vec::new());
    for (line, tokens) in &cur.lines[cur.pos..] {
        let line = *line;
        let rest = &tokens[1..];
        let cell = || rest.iter().map(|t| parse_usize(line, t)).collect::<Result<Vec<_>, _>>();
        match tokens[0] {
            "v" => vertices.push(vector(line, rest, dim)?),
            "corner" => corners.push(cell()?),
            "ridge" => ridges.push(cell()?),
            "facet" => facets.push(cell()?),
            other => return Err(IoError::parse(line, format!("unknown record `{other}`"))),
        }
    }
    if vertices.len() != nv {
        return Err(IoError::parse(cur.last_line(), format!("declared {nv} vertices, found {}", vertices.len())));
    }
    let mut t = TraditionalComplex::from_facets(dim, vertices, facets);
    if !corners.is_empty() {
        t.corners = corners;
    }
    if !ridges.is_empty() {
        t.ridges = ridges;
    }
    t.validate().map_err(|e| IoError::invalid(None, e.to_string()))?;
    Ok(t)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn serialize_plc_standard(c: &StandardComplex) -> String {
    let mut out = String::new();
    writeln!(out, "plc 1\ndim {}\nform standard", c.dim).unwrap();
    writeln!(out, "corners {}\nridges {}\nfacets {}", c.num_corners, c.num_ridges, c.num_facets).unwrap();
    for (r, f) in &c.ridge_facets {
        writeln!(out, "rf {r} {f}").unwrap();
    }
    for (k, r) in &c.corner_ridges {
        writeln!(out, "cr {k} {r}").unwrap();
    }
    for (k, f) in &c.corner_facets {
        writeln!(out, "cf {k} {f}").unwrap();
    }
    for (key, records) in [("rn", &c.ridge_normals), ("fn", &c.facet_normals)] {
        for n in records {
            writeln!(out, "{key} {} {} {}", n.corner, n.cell, join(n.vector.coords())).unwrap();
        }
    }
    out
}

pub fn serialize_plc_traditional(t: &TraditionalComplex) -> String {
    let mut out = String::new();
    writeln!(out, "plc 1\ndim {}\nform traditional\nvertices {}", t.dim, t.vertices.len()).unwrap();
    for v in &t.vertices {
        writeln!(out, "v {}", join(v.coords())).unwrap();
    }
    for (key, cells) in [("corner", &t.corners), ("ridge", &t.ridges), ("facet", &t.facets)] {
        for cell in cells {
            writeln!(out, "{key} {}", join(cell)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normals::to_standard;
    use crate::oracle::{cube, simplex_boundary};

    #[test]
    fn traditional_round_trip() {
        for t in [cube(), simplex_boundary(4)] {
            let text = serialize_plc_traditional(&t);
            assert_eq!(parse_plc(&text).unwrap(), PlcDocument::Traditional(t));
        }
    }

    #[test]
    fn standard_round_trip() {
        let s = to_standard(&cube()).unwrap();
        let text = serialize_plc_standard(&s);
        assert_eq!(parse_plc(&text).unwrap(), PlcDocument::Standard(s));
    }

    #[test]
    fn missing_facet_normal() {
        let s = to_standard(&cube()).unwrap();
        let text = serialize_plc_standard(&s);
        let first_fn = text.lines().find(|l| l.starts_with("fn ")).unwrap();
        let cut = text.replacen(&format!("{first_fn}\n"), "", 1);
        let err = parse_plc(&cut).unwrap_err();
        assert!(err.to_string().contains("missing normal"), "{err}");
    }

    #[test]
    fn derived_cells_are_optional() {
        let text = "plc 1\ndim 4\nform traditional\nvertices 5\n\
            v 0 0 0 0\nv 1 0 0 0\nv 0 1 0 0\nv 0 0 1 0\nv 0 0 0 1\n\
            facet 1 2 3 4\nfacet 0 2 3 4\nfacet 0 1 3 4\nfacet 0 1 2 4\nfacet 0 1 2 3\n";
        let PlcDocument::Traditional(t) = parse_plc(text).unwrap() else { panic!() };
        assert_eq!(t.corners.len(), 10);
        assert_eq!(t.ridges.len(), 10);
    }

    #[test]
    fn bad_header() {
        assert!(matches!(parse_plc("plc 2\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_plc("plc 1\ndim 3\nform other\n"), Err(IoError::Parse { line: 3, .. })));
    }
}
