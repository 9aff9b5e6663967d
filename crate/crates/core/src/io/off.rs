use std::collections::HashMap;
use std::fmt::Write;

use super::{content_lines, parse_usize, IoError};
use crate::exact::{parse_scalar, Vector};
use crate::normals::{DerivationError, TraditionalComplex};

/// Parses an ASCII OFF surface in `R^3`. Facets are polygons in cyclic
/// vertex order; every edge must lie in exactly two facets and every facet
/// must be exactly planar.
pub fn parse_off(text: &str) -> Result<TraditionalComplex, IoError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| IoError::parse(1, "empty file"))?;
    if header != ["OFF"] {
        return Err(IoError::parse(line, "expected header `OFF`"));
    }
    let (line, counts) = lines.next().ok_or_else(|| IoError::parse(line, "missing counts line"))?;
    if counts.len() != 3 {
        return Err(IoError::parse(line, "expected `V F E`"));
    }
    let nv = parse_usize(line, counts[0])?;
    let nf = parse_usize(line, counts[1])?;
    parse_usize(line, counts[2])?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (line, tokens) = lines.next().ok_or_else(|| IoError::parse(line, "missing vertex line"))?;
        if tokens.len() != 3 {
            return Err(IoError::parse(line, "vertex needs 3 coordinates"));
        }
        let coords = tokens
            .iter()
            .map(|t| parse_scalar(t).ok_or_else(|| IoError::parse(line, format!("bad number `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        vertices.push(Vector::new(coords));
    }

    let mut facets = Vec::with_capacity(nf);
    let mut facet_lines = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, tokens) = lines.next().ok_or_else(|| IoError::parse(line, "missing facet line"))?;
        let k = parse_usize(line, tokens[0])?;
        if tokens.len() != k + 1 {
            return Err(IoError::parse(line, format!("facet declares {k} vertices, found {}", tokens.len() - 1)));
        }
        if k < 3 {
            return Err(IoError::parse(line, "facet needs at least 3 vertices"));
        }
        let face = tokens[1..].iter().map(|t| parse_usize(line, t)).collect::<Result<Vec<_>, _>>()?;
        if let Some(&v) = face.iter().find(|&&v| v >= nv) {
            return Err(IoError::parse(line, format!("vertex index {v} out of range")));
        }
        facets.push(face);
        facet_lines.push(line);
    }
    if let Some((line, _)) = lines.next() {
        return Err(IoError::parse(line, "unexpected trailing content"));
    }

    let mut edge_uses: HashMap<(usize, usize), usize> = HashMap::new();
    for (f, face) in facets.iter().enumerate() {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            let count = edge_uses.entry((a.min(b), a.max(b))).or_default();
            *count += 1;
            if *count > 2 {
                return Err(IoError::invalid(
                    Some(facet_lines[f]),
                    format!("edge ({}, {}) lies in more than two facets", a.min(b), a.max(b)),
                ));
            }
        }
    }
    if let Some(((a, b), _)) = edge_uses.iter().filter(|(_, &c)| c != 2).min() {
        return Err(IoError::invalid(None, format!("edge ({a}, {b}) lies in only one facet")));
    }

    let t = TraditionalComplex::from_facets(3, vertices, facets);
    t.validate().map_err(|e| {
        let line = match e {
            DerivationError::NonPlanar { facet } | DerivationError::DegenerateVertex { facet, .. } => {
                Some(facet_lines[facet])
            }
            _ => None,
        };
        IoError::invalid(line, e.to_string())
    })?;
    Ok(t)
}

pub fn serialize_off(t: &TraditionalComplex) -> String {
    let mut out = String::new();
    writeln!(out, "OFF").unwrap();
    writeln!(out, "{} {} {}", t.vertices.len(), t.facets.len(), t.ridges.len()).unwrap();
    for v in &t.vertices {
        let coords: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
        writeln!(out, "{}", coords.join(" ")).unwrap();
    }
    for f in &t.facets {
        let ids: Vec<String> = f.iter().map(ToString::to_string).collect();
        writeln!(out, "{} {}", f.len(), ids.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::cube;

    const CUBE: &str = "OFF\n8 6 12\n\
        0 0 0\n1 0 0\n1 1 0\n0 1 0\n0 0 1\n1 0 1\n1 1 1\n0 1 1\n\
        4 0 3 2 1\n4 4 5 6 7\n4 0 1 5 4\n4 2 3 7 6\n4 1 2 6 5\n4 0 4 7 3\n";

    #[test]
    fn cube_parses() {
        let t = parse_off(CUBE).unwrap();
        assert_eq!(t.vertices.len(), 8);
        assert_eq!(t.ridges.len(), 12);
    }

    #[test]
    fn round_trip() {
        let t = cube();
        assert_eq!(parse_off(&serialize_off(&t)).unwrap(), t);
    }

    #[test]
    fn comments_and_rationals() {
        let text = CUBE.replace("1 1 1\n", "1 2/2 1.0 # top corner\n");
        assert!(parse_off(&text).is_ok());
    }

    #[test]
    fn three_facets_on_an_edge() {
        let text = "OFF\n5 4 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 -1 0\n\
            3 0 1 2\n3 0 1 3\n3 0 1 4\n3 1 2 3\n";
        assert!(matches!(parse_off(text), Err(IoError::Invalid { line: Some(10), .. })));
    }

    #[test]
    fn off_plane_vertex() {
        let text = CUBE.replace("1 1 1\n", "1 1 2\n");
        let err = parse_off(&text).unwrap_err();
        assert!(matches!(&err, IoError::Invalid { line: Some(_), message } if message.contains("not planar")));
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_off("OF\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_off("OFF\n1 0 0\n1 2\n"), Err(IoError::Parse { line: 3, .. })));
        assert!(matches!(parse_off("OFF\n1 0 0\n1 x 2\n"), Err(IoError::Parse { line: 3, .. })));
    }
}
