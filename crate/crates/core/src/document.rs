//! Reading and writing space (+ optional map) documents.
//!
//! Two interchange forms are accepted:
//!
//! * a JSON object with `points` (labels), `dist` (row-major matrix of
//!   rationals written as `"p/q"` or integer strings), and an optional
//!   `map` (list of `[label, image-label]` pairs covering every point
//!   exactly once);
//! * a CSV square matrix with a header row and a leading label column
//!   (the top-left cell is ignored). CSV carries no map.
//!
//! The format is sniffed from the first non-whitespace character: `{`
//! means JSON, anything else CSV. Parsed spaces are fully validated;
//! emission uses exact `"p/q"` strings, so parse ∘ emit is the
//! identity.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::map::SelfMap;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::space::FiniteMetricSpace;

/// The JSON document shape for a space and optional map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub dist: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<(String, String)>>,
}

/// Builds the document form of a space and optional map.
pub fn document_from_parts(space: &FiniteMetricSpace, map: Option<&SelfMap>) -> SpaceDocument {
    SpaceDocument {
        points: space.labels().to_vec(),
        dist: space
            .matrix()
            .iter()
            .map(|row| row.iter().map(format_rat).collect())
            .collect(),
        map: map.map(|m| {
            m.table()
                .iter()
                .enumerate()
                .map(|(i, &img)| (space.label(i).to_string(), space.label(img).to_string()))
                .collect()
        }),
    }
}

/// Serializes a space and optional map as pretty JSON.
pub fn emit_json(space: &FiniteMetricSpace, map: Option<&SelfMap>) -> String {
    let doc = document_from_parts(space, map);
    let mut text = serde_json::to_string_pretty(&doc).expect("document serialization is total");
    text.push('\n');
    text
}

/// Converts a parsed document into validated domain values.
pub fn resolve_document(
    doc: &SpaceDocument,
) -> Result<(FiniteMetricSpace, Option<SelfMap>), Error> {
    let mut dist: Vec<Vec<Rat>> = Vec::with_capacity(doc.dist.len());
    for row in &doc.dist {
        dist.push(row.iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?);
    }
    let space = FiniteMetricSpace::new(doc.points.clone(), dist)?;
    let map = match &doc.map {
        None => None,
        Some(pairs) => {
            let size = space.len();
            let mut table: Vec<Option<usize>> = vec![None; size];
            for (from, to) in pairs {
                let from_idx = space
                    .index_of(from)
                    .ok_or_else(|| Error::UnknownLabel(from.clone()))?;
                let to_idx = space
                    .index_of(to)
                    .ok_or_else(|| Error::UnknownLabel(to.clone()))?;
                if table[from_idx].is_some() {
                    return Err(Error::DuplicateMapEntry(from.clone()));
                }
                table[from_idx] = Some(to_idx);
            }
            let mut resolved = Vec::with_capacity(size);
            for (i, entry) in table.into_iter().enumerate() {
                match entry {
                    Some(img) => resolved.push(img),
                    None => return Err(Error::MissingMapEntry(space.label(i).to_string())),
                }
            }
            Some(SelfMap::new(size, resolved)?)
        }
    };
    Ok((space, map))
}

fn parse_csv(text: &str) -> Result<FiniteMetricSpace, Error> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for record in reader.records() {
        records.push(record?);
    }
    if records.len() < 2 {
        return Err(Error::EmptyMatrix);
    }
    let header = &records[0];
    let labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut dist: Vec<Vec<Rat>> = Vec::with_capacity(records.len() - 1);
    for (row_idx, record) in records[1..].iter().enumerate() {
        let mut fields = record.iter();
        let row_label = fields.next().unwrap_or_default();
        if labels.get(row_idx).map(String::as_str) != Some(row_label) {
            return Err(Error::Document(format!(
                "row {} is labeled {:?} but the header says {:?}",
                row_idx + 1,
                row_label,
                labels.get(row_idx).map(String::as_str).unwrap_or("<none>")
            )));
        }
        dist.push(fields.map(parse_rat).collect::<Result<_, _>>()?);
    }
    FiniteMetricSpace::new(labels, dist)
}

/// Parses a space document from text, sniffing JSON vs CSV.
pub fn parse_document(text: &str) -> Result<(FiniteMetricSpace, Option<SelfMap>), Error> {
    if text.trim_start().starts_with('{') {
        let doc: SpaceDocument = serde_json::from_str(text)?;
        resolve_document(&doc)
    } else {
        parse_csv(text).map(|space| (space, None))
    }
}

/// Serializes a space as a CSV matrix with label header and row labels.
pub fn emit_csv(space: &FiniteMetricSpace) -> String {
    let mut out = String::new();
    out.push_str("point");
    for label in space.labels() {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    for (i, row) in space.matrix().iter().enumerate() {
        out.push_str(space.label(i));
        for d in row {
            out.push(',');
            out.push_str(&format_rat(d));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use crate::space::example_family;

    #[test]
    fn json_round_trip_with_map() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        let text = emit_json(&space, Some(&map));
        let (space2, map2) = parse_document(&text).unwrap();
        assert_eq!(space2, space);
        assert_eq!(map2, Some(map));
    }

    #[test]
    fn json_round_trip_without_map() {
        let (space, _) = example_family(3, &rat_int(2)).unwrap();
        let text = emit_json(&space, None);
        assert!(!text.contains("\"map\""));
        let (space2, map2) = parse_document(&text).unwrap();
        assert_eq!(space2, space);
        assert_eq!(map2, None);
    }

    #[test]
    fn map_entry_errors() {
        let (space, map) = example_family(3, &rat_int(2)).unwrap();
        let mut doc = document_from_parts(&space, Some(&map));
        doc.map.as_mut().unwrap()[0].1 = "nope".into();
        assert!(matches!(
            resolve_document(&doc),
            Err(Error::UnknownLabel(l)) if l == "nope"
        ));

        let mut doc = document_from_parts(&space, Some(&map));
        doc.map.as_mut().unwrap()[1].0 = "x1".into();
        assert!(matches!(
            resolve_document(&doc),
            Err(Error::DuplicateMapEntry(l)) if l == "x1"
        ));

        let mut doc = document_from_parts(&space, Some(&map));
        doc.map.as_mut().unwrap().pop();
        assert!(matches!(
            resolve_document(&doc),
            Err(Error::MissingMapEntry(l)) if l == "x3"
        ));
    }

    #[test]
    fn bad_rational_in_matrix() {
        let (space, _) = example_family(3, &rat_int(2)).unwrap();
        let mut doc = document_from_parts(&space, None);
        doc.dist[0][1] = "0.5".into();
        assert!(matches!(
            resolve_document(&doc),
            Err(Error::BadRational(s)) if s == "0.5"
        ));
    }

    #[test]
    fn csv_round_trip() {
        let (space, _) = example_family(4, &rat_int(10)).unwrap();
        let text = emit_csv(&space);
        let (space2, map2) = parse_document(&text).unwrap();
        assert_eq!(space2, space);
        assert_eq!(map2, None);
    }

    #[test]
    fn csv_row_label_mismatch() {
        let text = "point,x1,x2\nx1,0,1\noops,1,0\n";
        assert!(matches!(parse_document(text), Err(Error::Document(_))));
    }

    #[test]
    fn csv_non_metric_is_rejected_with_validation_detail() {
        let text = "point,x1,x2,x3\nx1,0,5,1\nx2,5,0,1\nx3,1,1,0\n";
        match parse_document(text) {
            Err(Error::InvalidMetric(report)) => {
                assert_eq!(report.violations.len(), 1);
            }
            other => panic!("expected InvalidMetric, got {other:?}"),
        }
    }

    #[test]
    fn csv_empty_input() {
        assert!(matches!(parse_document(""), Err(Error::EmptyMatrix)));
    }

    #[test]
    fn leading_whitespace_still_sniffs_json() {
        let (space, _) = example_family(3, &rat_int(2)).unwrap();
        let text = format!("\n  {}", emit_json(&space, None));
        let (space2, _) = parse_document(&text).unwrap();
        assert_eq!(space2, space);
    }
}
