use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("invalid step {found:?} at position {pos}, expected 'U' or 'R'")]
    BadStep { pos: usize, found: char },
    #[error("path drops below height 0 at step {pos}")]
    BelowAxis { pos: usize },
    #[error("path ends at height {height}, expected 0")]
    Unbalanced { height: i32 },
    #[error("dotted pair {0}-{1} is not a matched U-R pair of the path")]
    DotNotMatched(u32, u32),
    #[error("dotted pair {0}-{1} is nested inside another pair")]
    DotNotOutermost(u32, u32),
    #[error("dotted pair {0}-{1} listed twice")]
    DuplicateDot(u32, u32),
    #[error("malformed dot list {0:?}, expected i-j[,i-j...]")]
    BadDotList(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    R,
}

/// A Dyck word of `U = (1,1)` and `R = (1,-1)` steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h = 0i32;
        for (k, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(PathError::BelowAxis { pos: k + 1 });
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced { height: h });
        }
        Ok(Self { steps })
    }

    /// `U^n R^n`.
    pub fn top(n: usize) -> Self {
        let mut steps = vec![Step::U; n];
        steps.extend(std::iter::repeat_n(Step::R, n));
        Self { steps }
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights at abscissas `0..=2n`.
    pub fn heights(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        out.push(h);
        for s in &self.steps {
            h += if *s == Step::U { 1 } else { -1 };
            out.push(h);
        }
        out
    }

    /// Matched U-R pairs as 1-based step positions `(i, j)`, sorted by `i`.
    pub fn matching(&self) -> Vec<(u32, u32)> {
        let mut stack = Vec::new();
        let mut pairs = Vec::with_capacity(self.size());
        for (k, s) in self.steps.iter().enumerate() {
            let pos = k as u32 + 1;
            match s {
                Step::U => stack.push(pos),
                Step::R => pairs.push((stack.pop().expect("validated Dyck word"), pos)),
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// Every Dyck path of size `n`, in lexicographic order with `U < R`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn go(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if ups == n && downs == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < n {
                cur.push(Step::U);
                go(n, ups + 1, downs, cur, out);
                cur.pop();
            }
            if downs < ups {
                cur.push(Step::R);
                go(n, ups, downs + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
        out
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(k, c)| match c {
                'U' => Ok(Step::U),
                'R' => Ok(Step::R),
                found => Err(PathError::BadStep { pos: k + 1, found }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "R" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

/// A Dyck path with some outermost matched pairs carrying a dot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedPath {
    path: DyckPath,
    dotted: Vec<(u32, u32)>,
}

impl DottedPath {
    pub fn new(path: DyckPath, mut dotted: Vec<(u32, u32)>) -> Result<Self, PathError> {
        dotted.sort_unstable();
        if let Some(w) = dotted.windows(2).find(|w| w[0] == w[1]) {
            return Err(PathError::DuplicateDot(w[0].0, w[0].1));
        }
        let matching = path.matching();
        let heights = path.heights();
        for &(i, j) in &dotted {
            if !matching.contains(&(i, j)) {
                return Err(PathError::DotNotMatched(i, j));
            }
            // the U step at position i starts at height heights[i-1]
            if heights[i as usize - 1] != 0 {
                return Err(PathError::DotNotOutermost(i, j));
            }
        }
        Ok(Self { path, dotted })
    }

    pub fn undotted(path: DyckPath) -> Self {
        Self {
            path,
            dotted: Vec::new(),
        }
    }

    /// Parses `URUURRUR` plus an optional dot list such as `3-6,7-8`.
    pub fn parse(path: &str, dots: Option<&str>) -> Result<Self, PathError> {
        let path: DyckPath = path.parse()?;
        let mut dotted = Vec::new();
        if let Some(list) = dots.map(str::trim).filter(|s| !s.is_empty()) {
            for item in list.split(',') {
                let bad = || PathError::BadDotList(list.to_string());
                let (a, b) = item.trim().split_once('-').ok_or_else(bad)?;
                let a: u32 = a.trim().parse().map_err(|_| bad())?;
                let b: u32 = b.trim().parse().map_err(|_| bad())?;
                dotted.push((a, b));
            }
        }
        Self::new(path, dotted)
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn dotted(&self) -> &[(u32, u32)] {
        &self.dotted
    }

    pub fn dot_count(&self) -> usize {
        self.dotted.len()
    }

    /// `l(c) = (j - i + 1) / 2` for a cap `c = (i, j)`.
    pub fn cap_size((i, j): (u32, u32)) -> usize {
        (j - i).div_ceil(2) as usize
    }
}

impl fmt::Display for DottedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path)?;
        if !self.dotted.is_empty() {
            let list: Vec<String> = self.dotted.iter().map(|(i, j)| format!("{i}-{j}")).collect();
            write!(f, " dots {}", list.join(","))?;
        }
        Ok(())
    }
}
