//! Exact cover by Algorithm X on dancing links.
//!
//! Column choice is minimum remaining candidates with ties broken by lowest
//! column index, and candidate rows are tried in increasing row index, so
//! the first solution found is a deterministic function of the input.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("row {row} references column {column}, but there are only {columns} columns")]
    ColumnOutOfRange {
        row: usize,
        column: usize,
        columns: usize,
    },
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
}

/// An exact cover instance: choose rows so every column is covered once.
#[derive(Debug, Clone)]
pub struct ExactCover {
    columns: usize,
    rows: Vec<Vec<usize>>,
}

/// Result of a search that ran to completion or found a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSearch {
    /// Selected row indices in increasing order, or `None` if no cover exists.
    pub solution: Option<Vec<usize>>,
    /// Search nodes visited.
    pub nodes: u64,
}

impl ExactCover {
    pub fn new(columns: usize) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    /// Adds a row; duplicate columns within a row are ignored.
    pub fn add_row(&mut self, cols: &[usize]) -> Result<usize, CoverError> {
        let row = self.rows.len();
        if let Some(&column) = cols.iter().find(|&&c| c >= self.columns) {
            return Err(CoverError::ColumnOutOfRange {
                row,
                column,
                columns: self.columns,
            });
        }
        let mut cols = cols.to_vec();
        cols.sort_unstable();
        cols.dedup();
        self.rows.push(cols);
        Ok(row)
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// First solution in search order. `budget` caps the number of search
    /// nodes; `None` means unlimited.
    pub fn solve(&self, budget: Option<u64>) -> Result<CoverSearch, CoverError> {
        let mut links = Links::build(self);
        let mut partial = Vec::new();
        let mut nodes = 0;
        let found = links.search(&mut partial, &mut nodes, budget.unwrap_or(u64::MAX))?;
        let solution = found.then(|| {
            let mut rows: Vec<usize> = partial.iter().map(|&n| links.row_of[n]).collect();
            rows.sort_unstable();
            rows
        });
        Ok(CoverSearch { solution, nodes })
    }
}

/// Toroidal doubly linked node arrays. Index 0 is the root, `1..=columns`
/// are column headers, the rest are row nodes.
struct Links {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row_of: Vec<usize>,
    size: Vec<usize>,
}

impl Links {
    fn build(problem: &ExactCover) -> Self {
        let headers = problem.columns + 1;
        let total = headers + problem.rows.iter().map(Vec::len).sum::<usize>();
        let mut l = Self {
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            column: Vec::with_capacity(total),
            row_of: Vec::with_capacity(total),
            size: vec![0; headers],
        };
        for i in 0..headers {
            l.left.push(if i == 0 { headers - 1 } else { i - 1 });
            l.right.push(if i + 1 == headers { 0 } else { i + 1 });
            l.up.push(i);
            l.down.push(i);
            l.column.push(i);
            l.row_of.push(usize::MAX);
        }
        for (r, cols) in problem.rows.iter().enumerate() {
            let first = l.left.len();
            for (t, &c) in cols.iter().enumerate() {
                let node = first + t;
                let header = c + 1;
                let prev = if t == 0 { first + cols.len() - 1 } else { node - 1 };
                let next = if t + 1 == cols.len() { first } else { node + 1 };
                l.left.push(prev);
                l.right.push(next);
                let last = l.up[header];
                l.up.push(last);
                l.down.push(header);
                l.down[last] = node;
                l.up[header] = node;
                l.column.push(header);
                l.row_of.push(r);
                l.size[header] += 1;
            }
        }
        l
    }

    fn cover(&mut self, c: usize) {
        self.right[self.left[c]] = self.right[c];
        self.left[self.right[c]] = self.left[c];
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                self.down[self.up[j]] = self.down[j];
                self.up[self.down[j]] = self.up[j];
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.column[j]] += 1;
                self.down[self.up[j]] = j;
                self.up[self.down[j]] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        self.right[self.left[c]] = c;
        self.left[self.right[c]] = c;
    }

    fn choose_column(&self) -> usize {
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        best
    }

    fn search(&mut self, partial: &mut Vec<usize>, nodes: &mut u64, budget: u64) -> Result<bool, CoverError> {
        if self.right[0] == 0 {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(CoverError::BudgetExceeded(budget));
        }
        let c = self.choose_column();
        if self.size[c] == 0 {
            return Ok(false);
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            partial.push(r);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            let outcome = self.search(partial, nodes, budget);
            if matches!(outcome, Ok(true) | Err(_)) {
                return outcome;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            partial.pop();
            r = self.down[r];
        }
        self.uncover(c);
        Ok(false)
    }
}
