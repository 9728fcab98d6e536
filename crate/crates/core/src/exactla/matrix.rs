use std::fmt::{self, Write as _};

/// Dense row-major matrix with optional row/column labels for audit dumps.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl<E: Clone> ExactMatrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![value; rows * cols],
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    /// Builds from row vectors; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: E) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Submatrix on the given row and column indices (labels carried over).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        let pick = |labels: &[String], idx: &[usize]| {
            if labels.is_empty() {
                Vec::new()
            } else {
                idx.iter().map(|&i| labels[i].clone()).collect()
            }
        };
        ExactMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
            row_labels: pick(&self.row_labels, rows),
            col_labels: pick(&self.col_labels, cols),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
        if !self.row_labels.is_empty() {
            self.row_labels.swap(a, b);
        }
    }

    pub fn map<F, T: Clone>(&self, f: F) -> ExactMatrix<T>
    where
        F: FnMut(&E) -> T,
    {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn try_map<F, T: Clone, Err>(&self, f: F) -> Result<ExactMatrix<T>, Err>
    where
        F: FnMut(&E) -> Result<T, Err>,
    {
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        })
    }
}

impl<E: Clone + fmt::Display> ExactMatrix<E> {
    /// Plain-text tabular dump: a header of column labels, then one line
    /// per row with its label and tab-separated entries.
    pub fn audit_dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# matrix {}x{}", self.rows, self.cols);
        if !self.col_labels.is_empty() {
            out.push_str("row\\col");
            for l in &self.col_labels {
                out.push('\t');
                out.push_str(l);
            }
            out.push('\n');
        }
        for r in 0..self.rows {
            match self.row_labels.get(r) {
                Some(l) => out.push_str(l),
                None => {
                    let _ = write!(out, "r{r}");
                }
            }
            for c in 0..self.cols {
                let _ = write!(out, "\t{}", self.get(r, c));
            }
            out.push('\n');
        }
        out
    }
}
