//! ASCII and SVG pictures of fillings.

use std::fmt::Write;

use rimhook::{Cell, Partition};

/// Grid of entries with the content of each diagonal written along the top
/// row and down the first column, e.g.
///
/// ```text
///        0   1   2   3
///     +----------------
///    0|  0   1   2   3
///   -1|  1   2   2
///   -2|  1
/// ```
///
/// Row `i` is labelled with the content of its first cell, column `j` with
/// the content of its top cell, so every diagonal can be followed from either
/// edge; cells flagged by `mark` get a `*`.
pub fn ascii(rows: &[Vec<u32>], mark: &dyn Fn(Cell) -> bool) -> String {
    let w = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2)
        + 1;
    let width = rows.first().map_or(0, Vec::len);
    let mut out = String::new();
    let _ = write!(out, "{:>4} ", "");
    for j in 0..width {
        let _ = write!(out, "{:>w$} ", j as i32);
    }
    out.push('\n');
    let _ = writeln!(out, "{:>4}+{}", "", "-".repeat(width * (w + 1)));
    for (i, row) in rows.iter().enumerate() {
        let _ = write!(out, "{:>4}|", -(i as i32));
        for (j, v) in row.iter().enumerate() {
            let star = if mark(Cell::new(i as i32 + 1, j as i32 + 1)) {
                "*"
            } else {
                " "
            };
            let _ = write!(out, "{:>w$}{star}", v);
        }
        out.push('\n');
    }
    out
}

const UNIT: usize = 40;

/// SVG of the diagram with optional entries; `highlight` cells are shaded
/// and joined by a line in the given order.
pub fn svg(shape: &Partition, rows: Option<&[Vec<u32>]>, highlight: &[Cell]) -> String {
    let width = shape.parts().first().copied().unwrap_or(0) * UNIT + 2;
    let height = shape.len() * UNIT + 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for u in shape.cells() {
        let (x, y) = origin(u);
        let fill = if highlight.contains(&u) {
            "#f4c542"
        } else {
            "#ffffff"
        };
        let _ = writeln!(
            out,
            r##"  <rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#000000"/>"##
        );
        if let Some(v) = rows.and_then(|r| r.get(u.row as usize - 1)?.get(u.col as usize - 1)) {
            let _ = writeln!(
                out,
                r#"  <text x="{}" y="{}" font-family="monospace" font-size="16" text-anchor="middle">{v}</text>"#,
                x + UNIT / 2,
                y + UNIT / 2 + 6
            );
        }
    }
    if highlight.len() > 1 {
        let points: Vec<String> = highlight
            .iter()
            .filter(|u| shape.contains(**u))
            .map(|&u| {
                let (x, y) = origin(u);
                format!("{},{}", x + UNIT / 2, y + UNIT / 2)
            })
            .collect();
        let _ = writeln!(
            out,
            r##"  <polyline points="{}" fill="none" stroke="#c0392b" stroke-width="3" stroke-opacity="0.6"/>"##,
            points.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}

fn origin(u: Cell) -> (usize, usize) {
    (
        (u.col as usize - 1) * UNIT + 1,
        (u.row as usize - 1) * UNIT + 1,
    )
}
