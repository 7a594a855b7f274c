//! Exact cover by dancing links.
//!
//! Primary columns must be covered exactly once, secondary columns at most
//! once. Column choice is deterministic: fewest remaining rows, ties broken
//! by the lower column index.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchEnd {
    /// The whole search tree was explored.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// The node budget ran out first.
    BudgetExhausted,
}

/// Result of a single-solution search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cover {
    Found(Vec<usize>),
    /// Proven: no exact cover exists.
    None,
    /// Search budget exhausted before a decision.
    Unknown,
}

#[derive(Debug, Clone, Default)]
pub struct ExactCover {
    primary: usize,
    secondary: usize,
    rows: Vec<Vec<usize>>,
}

impl ExactCover {
    pub fn new(primary: usize, secondary: usize) -> Self {
        ExactCover {
            primary,
            secondary,
            rows: Vec::new(),
        }
    }

    /// Adds a row; primary columns are `0..primary`, secondary columns follow.
    pub fn add_row(&mut self, mut cols: Vec<usize>) -> usize {
        cols.sort_unstable();
        cols.dedup();
        assert!(
            cols.iter().all(|&c| c < self.primary + self.secondary),
            "column out of range"
        );
        self.rows.push(cols);
        self.rows.len() - 1
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Calls `visit` with the row indices of each solution until it returns
    /// `false`, the tree is exhausted or `budget` search nodes are spent.
    pub fn search(&self, budget: u64, mut visit: impl FnMut(&[usize]) -> bool) -> SearchEnd {
        let mut links = Links::build(self);
        let mut state = State {
            budget,
            nodes: 0,
            chosen: Vec::new(),
        };
        links.solve(&mut state, &mut visit)
    }

    /// First solution in deterministic order.
    pub fn first(&self, budget: u64) -> Cover {
        let mut found = None;
        match self.search(budget, |rows| {
            found = Some(rows.to_vec());
            false
        }) {
            SearchEnd::Stopped => Cover::Found(found.expect("stopped only on a solution")),
            SearchEnd::Exhausted => Cover::None,
            SearchEnd::BudgetExhausted => Cover::Unknown,
        }
    }

    /// Every solution, or `None` when the budget ran out.
    pub fn all(&self, budget: u64) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let end = self.search(budget, |rows| {
            let mut r = rows.to_vec();
            r.sort_unstable();
            out.push(r);
            true
        });
        (end == SearchEnd::Exhausted).then_some(out)
    }
}

struct State {
    budget: u64,
    nodes: u64,
    chosen: Vec<usize>,
}

/// Node 0 is the root; nodes `1..=cols` are column headers.
struct Links {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
}

impl Links {
    fn build(ec: &ExactCover) -> Self {
        let cols = ec.primary + ec.secondary;
        let total = 1 + cols + ec.rows.iter().map(Vec::len).sum::<usize>();
        let mut l = Links {
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            col: Vec::with_capacity(total),
            row: Vec::with_capacity(total),
            size: vec![0; cols + 1],
        };
        for i in 0..=cols {
            l.left.push(i);
            l.right.push(i);
            l.up.push(i);
            l.down.push(i);
            l.col.push(i);
            l.row.push(usize::MAX);
        }
        // Link primary headers into the root list.
        for c in 1..=ec.primary {
            let last = l.left[0];
            l.right[last] = c;
            l.left[c] = last;
            l.right[c] = 0;
            l.left[0] = c;
        }
        for (r, cols_of_row) in ec.rows.iter().enumerate() {
            let mut first: Option<usize> = None;
            for &c in cols_of_row {
                let h = c + 1;
                let node = l.left.len();
                let above = l.up[h];
                l.up.push(above);
                l.down.push(h);
                l.down[above] = node;
                l.up[h] = node;
                l.col.push(h);
                l.row.push(r);
                l.size[h] += 1;
                match first {
                    None => {
                        l.left.push(node);
                        l.right.push(node);
                        first = Some(node);
                    }
                    Some(f) => {
                        let last = l.left[f];
                        l.left.push(last);
                        l.right.push(f);
                        l.right[last] = node;
                        l.left[f] = node;
                    }
                }
            }
        }
        l
    }

    fn cover(&mut self, c: usize) {
        let (lc, rc) = (self.left[c], self.right[c]);
        self.right[lc] = rc;
        self.left[rc] = lc;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
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
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (lc, rc) = (self.left[c], self.right[c]);
        self.right[lc] = c;
        self.left[rc] = c;
    }

    fn solve(&mut self, st: &mut State, visit: &mut impl FnMut(&[usize]) -> bool) -> SearchEnd {
        if self.right[0] == 0 {
            return if visit(&st.chosen) {
                SearchEnd::Exhausted
            } else {
                SearchEnd::Stopped
            };
        }
        st.nodes += 1;
        if st.nodes > st.budget {
            return SearchEnd::BudgetExhausted;
        }
        let mut c = self.right[0];
        let mut best = c;
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        let c = best;
        if self.size[c] == 0 {
            return SearchEnd::Exhausted;
        }
        self.cover(c);
        let mut r = self.down[c];
        let mut end = SearchEnd::Exhausted;
        while r != c {
            st.chosen.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.col[j]);
                j = self.right[j];
            }
            end = self.solve(st, visit);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.col[j]);
                j = self.left[j];
            }
            st.chosen.pop();
            if end != SearchEnd::Exhausted {
                break;
            }
            r = self.down[r];
        }
        self.uncover(c);
        end
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knuth_example() -> ExactCover {
        let mut ec = ExactCover::new(7, 0);
        for row in [
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ] {
            ec.add_row(row);
        }
        ec
    }

    #[test]
    fn unique_solution() {
        let ec = knuth_example();
        assert_eq!(ec.all(u64::MAX), Some(vec![vec![0, 3, 4]]));
        assert_eq!(ec.first(u64::MAX), Cover::Found(vec![3, 0, 4]));
    }

    #[test]
    fn no_solution() {
        let mut ec = ExactCover::new(3, 0);
        ec.add_row(vec![0, 1]);
        ec.add_row(vec![1, 2]);
        assert_eq!(ec.first(u64::MAX), Cover::None);
    }

    #[test]
    fn secondary_columns_at_most_once() {
        // Cover {0,1} with rows that may touch secondary column 2 once.
        let mut ec = ExactCover::new(2, 1);
        ec.add_row(vec![0, 2]);
        ec.add_row(vec![1, 2]);
        ec.add_row(vec![1]);
        assert_eq!(ec.all(u64::MAX), Some(vec![vec![0, 2]]));
    }

    #[test]
    fn budget_reported() {
        // Perfect matchings of K_8: 105 of them.
        let mut ec = ExactCover::new(8, 0);
        for a in 0..8 {
            for b in a + 1..8 {
                ec.add_row(vec![a, b]);
            }
        }
        assert_eq!(ec.all(u64::MAX).map(|s| s.len()), Some(105));
        assert_eq!(ec.search(3, |_| true), SearchEnd::BudgetExhausted);
    }
}
