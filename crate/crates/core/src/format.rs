//! Grid text and JSON forms shared by reverse plane partitions and tableaux.
//!
//! Text: one line per row, entries separated by spaces. JSON:
//! `{"shape":[...],"rows":[[...],...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Cell, Partition};

/// Serialized form of any filling of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridJson {
    pub shape: Partition,
    pub rows: Vec<Vec<i64>>,
}

/// Parses whitespace separated rows; blank lines are skipped. Negative entries
/// are reported, so callers need not repeat the check.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let r = rows.len() as i32 + 1;
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(k, tok)| parse_entry(tok, Cell::new(r, k as i32 + 1)))
            .collect::<Result<Vec<u32>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn parse_entry(tok: &str, at: Cell) -> Result<u32> {
    match tok.parse::<i64>() {
        Ok(v) if v < 0 => Err(Error::NegativeEntry { cell: at }),
        Ok(v) => u32::try_from(v).map_err(|_| Error::Parse(format!("entry {v} too large"))),
        Err(_) => Err(Error::Parse(format!("bad entry {tok:?} at {at}"))),
    }
}

/// Row lengths of a grid, checked to form a partition.
pub fn shape_of(rows: &[Vec<u32>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// Checks that `rows` fits `shape` exactly.
pub fn check_fits(shape: &Partition, rows: &[Vec<u32>]) -> Result<()> {
    if rows.len() != shape.len() {
        return Err(Error::RowCount {
            expected: shape.len(),
            found: rows.len(),
        });
    }
    for (i, (row, &want)) in rows.iter().zip(shape.parts()).enumerate() {
        if row.len() != want {
            return Err(Error::RaggedGrid {
                row: i + 1,
                expected: want,
                found: row.len(),
            });
        }
    }
    Ok(())
}

pub fn grid_to_string(rows: &[Vec<u32>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Converts a JSON grid, rejecting negative entries.
pub fn from_json(g: &GridJson) -> Result<(Partition, Vec<Vec<u32>>)> {
    let rows = g
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| parse_entry(&v.to_string(), Cell::new(i as i32 + 1, j as i32 + 1)))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    check_fits(&g.shape, &rows)?;
    Ok((g.shape.clone(), rows))
}

pub fn to_json(shape: &Partition, rows: &[Vec<u32>]) -> GridJson {
    GridJson {
        shape: shape.clone(),
        rows: rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rows() {
        let rows = parse_grid("0 1 2 3\n1 2 2\n\n1\n").unwrap();
        assert_eq!(rows, vec![vec![0, 1, 2, 3], vec![1, 2, 2], vec![1]]);
        assert_eq!(shape_of(&rows).unwrap().parts(), &[4, 3, 1]);
        assert_eq!(grid_to_string(&rows), "0 1 2 3\n1 2 2\n1\n");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_grid("0 1\n2 -1"),
            Err(Error::NegativeEntry {
                cell: Cell::new(2, 2)
            })
        );
        assert!(parse_grid("0 x").is_err());
        assert!(shape_of(&[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn fits() {
        let shape: Partition = "2,1".parse().unwrap();
        assert!(check_fits(&shape, &[vec![0, 0], vec![0]]).is_ok());
        assert_eq!(
            check_fits(&shape, &[vec![0, 0]]),
            Err(Error::RowCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            check_fits(&shape, &[vec![0, 0], vec![0, 0]]),
            Err(Error::RaggedGrid {
                row: 2,
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn json_round_trip() {
        let shape: Partition = "2,1".parse().unwrap();
        let rows = vec![vec![0, 3], vec![1]];
        let j = to_json(&shape, &rows);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"shape":[2,1],"rows":[[0,3],[1]]}"#);
        let back: GridJson = serde_json::from_str(&text).unwrap();
        assert_eq!(from_json(&back).unwrap(), (shape, rows));
        let neg: GridJson = serde_json::from_str(r#"{"shape":[1],"rows":[[-2]]}"#).unwrap();
        assert!(matches!(from_json(&neg), Err(Error::NegativeEntry { .. })));
    }
}
