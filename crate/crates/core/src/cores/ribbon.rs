use serde::{Deserialize, Serialize};

use super::partition::{content, Cell, Partition};

/// A rook-connected skew shape without a 2×2 block.
///
/// Cells are kept in increasing content order, so the tail comes first and
/// the head last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ribbon {
    cells: Vec<Cell>,
}

impl Ribbon {
    /// Accepts a rook-connected cell set with distinct contents.
    pub fn new(mut cells: Vec<Cell>) -> Option<Self> {
        if cells.is_empty() {
            return None;
        }
        cells.sort_by_key(|&c| content(c));
        let connected = cells.windows(2).all(|p| {
            let ((i0, j0), (i1, j1)) = (p[0], p[1]);
            (i0 == i1 && j1 == j0 + 1) || (j0 == j1 && i0 == i1 + 1)
        });
        connected.then_some(Ribbon { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Southeasternmost cell.
    pub fn head(&self) -> Cell {
        *self.cells.last().expect("ribbons are nonempty")
    }

    /// Northwesternmost cell.
    pub fn tail(&self) -> Cell {
        self.cells[0]
    }

    pub fn head_content(&self) -> i64 {
        content(self.head())
    }

    pub fn tail_content(&self) -> i64 {
        content(self.tail())
    }

    /// Number of rows the ribbon occupies.
    pub fn height(&self) -> usize {
        let lo = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let hi = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        hi - lo + 1
    }

    /// Offsets of each cell from the tail; equal for translated copies.
    pub fn profile(&self) -> Vec<(i64, i64)> {
        let (ti, tj) = self.tail();
        self.cells
            .iter()
            .map(|&(i, j)| (i as i64 - ti as i64, j as i64 - tj as i64))
            .collect()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }
}

/// Rook-connected components of `outer / inner`, ordered by head content,
/// or `None` if some component is not a ribbon.
pub fn skew_ribbons(outer: &Partition, inner: &Partition) -> Option<Vec<Ribbon>> {
    let cells = outer.skew_cells(inner);
    let mut seen = vec![false; cells.len()];
    let index = |c: Cell| cells.iter().position(|&d| d == c);
    let mut out = Vec::new();
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(k) = stack.pop() {
            let (i, j) = cells[k];
            comp.push((i, j));
            let nbrs = [
                (i + 1, j),
                (i.wrapping_sub(1), j),
                (i, j + 1),
                (i, j.wrapping_sub(1)),
            ];
            for nb in nbrs {
                if let Some(m) = index(nb) {
                    if !seen[m] {
                        seen[m] = true;
                        stack.push(m);
                    }
                }
            }
        }
        out.push(Ribbon::new(comp)?);
    }
    out.sort_by_key(|r| r.head_content());
    Some(out)
}
