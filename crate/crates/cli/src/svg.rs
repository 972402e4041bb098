//! Staircase plots of two-variable monomial ideals.
//!
//! Output depends only on the inputs: fixed header, cells in row-major order
//! from the top, integer coordinates throughout. Golden-file friendly.

use std::fmt::Write as _;

use rrclosure::{Error, ExponentVector, MonomialIdeal};

const CELL: i64 = 24;
const MARGIN: i64 = 48;
const INPUT_FILL: &str = "#2f4b7c";
const ADDED_FILL: &str = "#ffa600";
const GRID: &str = "#d0d0d0";

fn extent(ideal: &MonomialIdeal, axis: usize) -> i64 {
    ideal.generators().iter().map(|g| g.as_slice()[axis]).max().unwrap_or(0)
}

/// Draws the exponents of `input` in a dark shade and those `result` adds in
/// a light one, with axis ticks labelled by exponent and the axes by `vars`.
pub fn staircase_svg(
    vars: &[String],
    input: &MonomialIdeal,
    result: &MonomialIdeal,
    title: &str,
) -> rrclosure::Result<String> {
    for i in [input, result] {
        if i.nvars() != 2 {
            return Err(Error::UnsupportedDimension(i.nvars()));
        }
    }
    let cols = (extent(input, 0).max(extent(result, 0)) + 2).max(4);
    let rows = (extent(input, 1).max(extent(result, 1)) + 2).max(4);
    let width = cols * CELL + 2 * MARGIN;
    let height = rows * CELL + 2 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);

    let x0 = MARGIN;
    let y0 = MARGIN + rows * CELL;
    for b in (0..rows).rev() {
        for a in 0..cols {
            let m = ExponentVector::new(vec![a, b]);
            let fill = if input.contains(&m)? {
                INPUT_FILL
            } else if result.contains(&m)? {
                ADDED_FILL
            } else {
                continue;
            };
            let _ = writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}"/>"#,
                x0 + a * CELL,
                y0 - (b + 1) * CELL
            );
        }
    }
    for a in 0..=cols {
        let x = x0 + a * CELL;
        let _ = writeln!(s, r#"<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{y0}" stroke="{GRID}"/>"#);
    }
    for b in 0..=rows {
        let y = y0 - b * CELL;
        let _ = writeln!(s, r#"<line x1="{x0}" y1="{y}" x2="{}" y2="{y}" stroke="{GRID}"/>"#, x0 + cols * CELL);
    }
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#, x0 + cols * CELL);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN}" stroke="black"/>"#);
    for a in 0..cols {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{a}</text>"#,
            x0 + a * CELL + CELL / 2,
            y0 + 16
        );
    }
    for b in 0..rows {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{b}</text>"#,
            x0 - 6,
            y0 - b * CELL - CELL / 2 + 4
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">exponent of {}</text>"#,
        x0 + cols * CELL / 2,
        y0 + 36,
        escape(&vars[0])
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" text-anchor="middle" transform="rotate(-90 14 {})">exponent of {}</text>"#,
        MARGIN + rows * CELL / 2,
        MARGIN + rows * CELL / 2,
        escape(&vars[1])
    );
    let _ = writeln!(s, r#"<rect x="{x0}" y="12" width="12" height="12" fill="{INPUT_FILL}"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="22">input</text>"#, x0 + 16);
    let _ = writeln!(s, r#"<rect x="{}" y="12" width="12" height="12" fill="{ADDED_FILL}"/>"#, x0 + 72);
    let _ = writeln!(s, r#"<text x="{}" y="22">added by result</text>"#, x0 + 88);
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
