//! ASCII and SVG pictures of Jordan structures, and Ferrers diagrams.
//!
//! A [`StructureGrid`] forgets eigenvalue values and keeps only which group
//! each diagonal cell belongs to, so two specs with the same Segre
//! characteristic in the same group order draw identically.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::jordan::JordanSpec;
use crate::partitions::{conjugate, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    Zero,
    One,
    /// 1-based group position.
    Eigenvalue(usize),
}

/// Structural picture of a Jordan matrix. Only non-zero cells are stored;
/// coordinates are 0-based `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureGrid {
    n: usize,
    cells: BTreeMap<(usize, usize), CellKind>,
}

impl StructureGrid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell(&self, row: usize, col: usize) -> CellKind {
        self.cells
            .get(&(row, col))
            .copied()
            .unwrap_or(CellKind::Zero)
    }

    /// Non-zero cells in row-major order.
    pub fn nonzero_cells(&self) -> impl Iterator<Item = ((usize, usize), CellKind)> + '_ {
        self.cells.iter().map(|(&pos, &kind)| (pos, kind))
    }

    pub fn num_groups(&self) -> usize {
        self.cells
            .values()
            .filter_map(|k| match k {
                CellKind::Eigenvalue(i) => Some(*i),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }
}

pub fn grid_of(spec: &JordanSpec) -> StructureGrid {
    let mut cells = BTreeMap::new();
    let mut offset = 0;
    for (g, group) in spec.segre().groups().iter().enumerate() {
        for &block in group.parts() {
            for i in 0..block {
                cells.insert((offset + i, offset + i), CellKind::Eigenvalue(g + 1));
                if i + 1 < block {
                    cells.insert((offset + i, offset + i + 1), CellKind::One);
                }
            }
            offset += block;
        }
    }
    StructureGrid { n: offset, cells }
}

/// One line per row: `.` for zero, `1` for a superdiagonal one, and `a`,
/// `b`, `c`, ... for the eigenvalue groups. With more than 26 groups every
/// cell is written bracketed instead (`[.]`, `[1]`, `[27]`), so rows are no
/// longer `n` characters wide.
pub fn render_ascii(g: &StructureGrid) -> String {
    let bracketed = g.num_groups() > 26;
    let mut out = String::new();
    for r in 0..g.n {
        if r > 0 {
            out.push('\n');
        }
        for c in 0..g.n {
            match (g.cell(r, c), bracketed) {
                (CellKind::Zero, false) => out.push('.'),
                (CellKind::One, false) => out.push('1'),
                (CellKind::Eigenvalue(i), false) => out.push((b'a' + (i - 1) as u8) as char),
                (CellKind::Zero, true) => out.push_str("[.]"),
                (CellKind::One, true) => out.push_str("[1]"),
                (CellKind::Eigenvalue(i), true) => {
                    let _ = write!(out, "[{i}]");
                }
            }
        }
    }
    out
}

pub const CELL_SIZE: usize = 16;
pub const GUTTER: usize = 8;

const EIGENVALUE_COLORS: [(u32, u32, u32); 5] = [
    (0xff, 0xa5, 0x00), // orange
    (0x00, 0x80, 0x00), // green
    (0xff, 0x00, 0x00), // red
    (0x00, 0x00, 0xff), // blue
    (0x80, 0x00, 0x80), // purple
];

/// Fill colour for a cell. Groups past the fifth reuse the palette, each
/// further cycle scaled by 3/4.
pub fn cell_color(kind: CellKind) -> String {
    match kind {
        CellKind::Zero => "#ffffff".into(),
        CellKind::One => "#000000".into(),
        CellKind::Eigenvalue(i) => {
            let (r, g, b) = EIGENVALUE_COLORS[(i - 1) % 5];
            let cycle = ((i - 1) / 5).min(16) as u32;
            let darken = |c: u32| c * 3u32.pow(cycle) / 4u32.pow(cycle);
            format!("#{:02x}{:02x}{:02x}", darken(r), darken(g), darken(b))
        }
    }
}

/// All grids in one SVG, laid out row-major with `columns` grids per row.
///
/// Every grid sits in a `<g class="segre-grid">` slot sized for the largest
/// grid, with one framed `rect` per cell and an outer frame.
pub fn render_svg(grids: &[StructureGrid], columns: usize) -> String {
    let columns = columns.max(1);
    let slot = grids.iter().map(|g| g.n).max().unwrap_or(0) * CELL_SIZE;
    let used_cols = grids.len().min(columns);
    let used_rows = grids.len().div_ceil(columns);
    let (width, height) = if grids.is_empty() {
        (0, 0)
    } else {
        (
            GUTTER + used_cols * (slot + GUTTER),
            GUTTER + used_rows * (slot + GUTTER),
        )
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    if !grids.is_empty() {
        let _ = writeln!(
            out,
            "  <rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>"
        );
    }
    for (idx, g) in grids.iter().enumerate() {
        let x = GUTTER + (idx % columns) * (slot + GUTTER);
        let y = GUTTER + (idx / columns) * (slot + GUTTER);
        let _ = writeln!(
            out,
            "  <g class=\"segre-grid\" transform=\"translate({x},{y})\">"
        );
        for r in 0..g.n {
            for c in 0..g.n {
                let _ = writeln!(
                    out,
                    "    <rect x=\"{}\" y=\"{}\" width=\"{CELL_SIZE}\" height=\"{CELL_SIZE}\" \
                     fill=\"{}\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>",
                    c * CELL_SIZE,
                    r * CELL_SIZE,
                    cell_color(g.cell(r, c))
                );
            }
        }
        let side = g.n * CELL_SIZE;
        let _ = writeln!(
            out,
            "    <rect class=\"frame\" x=\"0\" y=\"0\" width=\"{side}\" height=\"{side}\" \
             fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>"
        );
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// One row of `*` per part.
pub fn render_ferrers(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|&part| "*".repeat(part))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `p` and its conjugate side by side.
pub fn render_ferrers_conjugate_pair(p: &Partition) -> String {
    let q = conjugate(p);
    let width = p.largest();
    let rows = p.len().max(q.len());
    (0..rows)
        .map(|i| {
            let left = "*".repeat(p.parts().get(i).copied().unwrap_or(0));
            let right = "*".repeat(q.parts().get(i).copied().unwrap_or(0));
            format!("{left:<width$}   {right}").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}
