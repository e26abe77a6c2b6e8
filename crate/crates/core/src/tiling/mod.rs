//! Cover-inclusive Dyck tilings of the region between a Dyck path `mu` and
//! the top path `U^n R^n`, and their generating functions.
//!
//! Cells are unit diamonds with center `(x, y)`, `x + y` odd, and corners
//! `(x±1, y)`, `(x, y±1)`. A tile is a ribbon of cells whose centers trace a
//! Dyck path; a single cell is a tile of size 0.

mod path;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagram::Flavor;
use crate::scalar::{qratio, qratio_b, quantum_b, Scalar};

pub use path::{DottedPath, DyckPath, PathError, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

/// A Dyck tile: its lowest height `h`, the abscissa of its leftmost cell, and
/// the Dyck word traced by its cell centers.
///
/// Field order gives the canonical tile order `(h, start_x, profile)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckTile {
    h: i32,
    start_x: i32,
    profile: DyckPath,
}

impl DyckTile {
    pub fn new(h: i32, start_x: i32, profile: DyckPath) -> Self {
        Self { h, start_x, profile }
    }

    /// `h(d)`: the minimum center height.
    pub fn h(&self) -> i32 {
        self.h
    }

    pub fn start_x(&self) -> i32 {
        self.start_x
    }

    pub fn profile(&self) -> &DyckPath {
        &self.profile
    }

    pub fn size(&self) -> usize {
        self.profile.size()
    }

    pub fn end_x(&self) -> i32 {
        self.start_x + 2 * self.size() as i32
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.profile
            .heights()
            .into_iter()
            .enumerate()
            .map(move |(k, dy)| Cell {
                x: self.start_x + k as i32,
                y: self.h + dy,
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    mu: DyckPath,
    tiles: Vec<DyckTile>,
}

impl Tiling {
    pub fn mu(&self) -> &DyckPath {
        &self.mu
    }

    /// Tiles in canonical order.
    pub fn tiles(&self) -> &[DyckTile] {
        &self.tiles
    }

    pub fn new(mu: DyckPath, mut tiles: Vec<DyckTile>) -> Self {
        tiles.sort();
        Self { mu, tiles }
    }
}

/// Geometry of `R(mu)`.
struct Region {
    heights: Vec<i32>,
    n: i32,
    /// cells in `(y, x)` order
    cells: Vec<Cell>,
    /// `index[x][y]` into `cells`
    index: Vec<Vec<Option<usize>>>,
}

impl Region {
    fn new(mu: &DyckPath) -> Self {
        let heights = mu.heights();
        let n = mu.size() as i32;
        let mut cells = Vec::new();
        for x in 1..2 * n {
            let top = x.min(2 * n - x);
            let mut y = heights[x as usize] + 1;
            while y < top {
                cells.push(Cell { x, y });
                y += 2;
            }
        }
        cells.sort_by_key(|c| (c.y, c.x));
        let mut index = vec![vec![None; n as usize + 2]; 2 * n as usize + 1];
        for (k, c) in cells.iter().enumerate() {
            index[c.x as usize][c.y as usize] = Some(k);
        }
        Self {
            heights,
            n,
            cells,
            index,
        }
    }

    fn lookup(&self, x: i32, y: i32) -> Option<usize> {
        if x <= 0 || x >= 2 * self.n || y < 0 {
            return None;
        }
        self.index[x as usize].get(y as usize).copied().flatten()
    }

    /// Cell strictly below `mu`.
    fn below(&self, x: i32, y: i32) -> bool {
        x <= 0 || x >= 2 * self.n || y < self.heights[x as usize]
    }
}

/// The cells of `R(mu)`: centers with `mu(x) < y < min(x, 2n - x)`.
pub fn region_cells(mu: &DyckPath) -> BTreeSet<Cell> {
    Region::new(mu).cells.into_iter().collect()
}

struct Search<'a> {
    region: &'a Region,
    mu: &'a DyckPath,
    owner: Vec<Option<usize>>,
    placed: Vec<DyckTile>,
    out: Vec<Tiling>,
}

impl Search<'_> {
    /// The tile containing `tile` shifted down by two, `None` if the shift is
    /// entirely below `mu` or not yet covered. `Err` if the shift straddles
    /// `mu` or meets two distinct tiles.
    fn shift_owner(&self, tile: &DyckTile) -> Result<Option<usize>, ()> {
        let mut seen = None;
        let below = tile.cells().filter(|c| self.region.below(c.x, c.y - 2)).count();
        if below == tile.size() * 2 + 1 {
            return Ok(None);
        }
        if below > 0 {
            return Err(());
        }
        for c in tile.cells() {
            let (x, y) = (c.x, c.y - 2);
            let k = self.region.lookup(x, y).expect("cell above mu and below the top");
            if let Some(o) = self.owner[k] {
                match seen {
                    None => seen = Some(o),
                    Some(s) if s == o => {}
                    Some(_) => return Err(()),
                }
            }
        }
        Ok(seen)
    }

    fn consistent_after_placing(&self, t: usize) -> bool {
        let tile = &self.placed[t];
        if self.shift_owner(tile).is_err() {
            return false;
        }
        for c in tile.cells() {
            if let Some(k) = self.region.lookup(c.x, c.y + 2) {
                if let Some(u) = self.owner[k] {
                    if u != t && self.shift_owner(&self.placed[u]).is_err() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, from: usize) {
        let Some(k) = (from..self.region.cells.len()).find(|&k| self.owner[k].is_none()) else {
            let tiling = Tiling::new(self.mu.clone(), self.placed.clone());
            debug_assert!(is_cover_inclusive(&tiling));
            self.out.push(tiling);
            return;
        };
        let start = self.region.cells[k];
        let mut cells = vec![k];
        let mut steps = Vec::new();
        self.grow(start, 0, &mut cells, &mut steps, k);
    }

    /// Extends the tile profile one step at a time; every return to the
    /// base height is a complete tile to try.
    fn grow(&mut self, start: Cell, rel: i32, cells: &mut Vec<usize>, steps: &mut Vec<Step>, from: usize) {
        if rel == 0 {
            self.try_tile(start, cells, steps, from);
        }
        let x = start.x + steps.len() as i32 + 1;
        for (step, dy) in [(Step::U, 1), (Step::R, -1)] {
            let nrel = rel + dy;
            if nrel < 0 {
                continue;
            }
            let Some(k) = self.region.lookup(x, start.y + nrel) else {
                continue;
            };
            if self.owner[k].is_some() {
                continue;
            }
            cells.push(k);
            steps.push(step);
            self.grow(start, nrel, cells, steps, from);
            steps.pop();
            cells.pop();
        }
    }

    fn try_tile(&mut self, start: Cell, cells: &[usize], steps: &[Step], from: usize) {
        let profile = DyckPath::new(steps.to_vec()).expect("profile returns to base height");
        let t = self.placed.len();
        self.placed.push(DyckTile::new(start.y, start.x, profile));
        for &k in cells {
            self.owner[k] = Some(t);
        }
        if self.consistent_after_placing(t) {
            self.run(from + 1);
        }
        for &k in cells {
            self.owner[k] = None;
        }
        self.placed.pop();
    }
}

/// Every cover-inclusive Dyck tiling of `R(mu)`, sorted.
///
/// Cells are scanned in `(y, x)` order; the first uncovered cell must be the
/// leftmost cell of the tile that covers it, so the search branches over all
/// tiles starting there. Cover-inclusiveness is checked incrementally.
pub fn enumerate_tilings(mu: &DyckPath) -> Vec<Tiling> {
    let region = Region::new(mu);
    let mut search = Search {
        region: &region,
        mu,
        owner: vec![None; region.cells.len()],
        placed: Vec::new(),
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort();
    out
}

/// Cover-inclusive: every tile shifted down by two lies either entirely
/// below `mu` or entirely inside one other tile.
pub fn is_cover_inclusive(t: &Tiling) -> bool {
    let region = Region::new(&t.mu);
    let mut owner = vec![None; region.cells.len()];
    for (i, tile) in t.tiles.iter().enumerate() {
        for c in tile.cells() {
            match region.lookup(c.x, c.y) {
                Some(k) if owner[k].is_none() => owner[k] = Some(i),
                _ => return false,
            }
        }
    }
    if owner.iter().any(Option::is_none) {
        return false;
    }
    t.tiles.iter().all(|tile| {
        let below = tile.cells().filter(|c| region.below(c.x, c.y - 2)).count();
        if below > 0 {
            return below == tile.cells().count();
        }
        let hits: BTreeSet<usize> = tile
            .cells()
            .filter_map(|c| region.lookup(c.x, c.y - 2).and_then(|k| owner[k]))
            .collect();
        hits.len() == 1
    })
}

fn height_ratio(flavor: Flavor, h: usize) -> Scalar {
    match flavor {
        Flavor::A => qratio(h, h + 1),
        Flavor::B => qratio_b(h, h + 1),
    }
}

/// `prod [h(d)]/[h(d)+1]` (type A) or `prod [h(d)]_s/[h(d)+1]_s` (type B).
pub fn tiling_weight(t: &Tiling, flavor: Flavor) -> Scalar {
    t.tiles
        .iter()
        .fold(Scalar::one(), |acc, d| &acc * &height_ratio(flavor, d.h as usize))
}

/// Sum of weights. Tilings are grouped by their multiset of tile heights so
/// each distinct weight is built once.
fn weight_sum<'a>(tilings: impl Iterator<Item = &'a Tiling>, flavor: Flavor) -> Scalar {
    let mut groups: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for t in tilings {
        let mut hs: Vec<usize> = t.tiles.iter().map(|d| d.h as usize).collect();
        hs.sort_unstable();
        *groups.entry(hs).or_insert(0) += 1;
    }
    let mut ratios: Vec<Scalar> = Vec::new();
    let mut acc = Scalar::zero();
    for (hs, count) in groups {
        let mut w = Scalar::from_int(count);
        for h in hs {
            while ratios.len() <= h {
                ratios.push(height_ratio(flavor, ratios.len()));
            }
            w = &w * &ratios[h];
        }
        acc = &acc + &w;
    }
    acc
}

/// No tile sits above a dotted cap `c = (i, j)` spanning it, i.e. with
/// center abscissas covering all of `[i-1, j]`. Such a tile has size at
/// least `l(c)`.
pub fn admissible(t: &Tiling, dotted: &[(u32, u32)]) -> bool {
    dotted.iter().all(|&(i, j)| {
        !t.tiles
            .iter()
            .any(|d| d.start_x < i as i32 && d.end_x() >= j as i32)
    })
}

/// `Z(mu)`: the sum of type-A weights over all cover-inclusive tilings.
pub fn gf_a(mu: &DyckPath) -> Scalar {
    weight_sum(enumerate_tilings(mu).iter(), Flavor::A)
}

/// `Z^B`: `(1/[1]_s)^{#dots}` times the type-B weights of admissible tilings.
pub fn gf_b(p: &DottedPath) -> Scalar {
    let tilings = enumerate_tilings(p.path());
    let sum = weight_sum(tilings.iter().filter(|t| admissible(t, p.dotted())), Flavor::B);
    let prefactor = Scalar::ratio(crate::scalar::LaurentPoly::one(), &quantum_b(1))
        .expect("[1]_s is nonzero")
        .pow(p.dot_count() as u32);
    &prefactor * &sum
}

/// Generating function for either flavor; type A ignores dots.
pub fn gf(flavor: Flavor, p: &DottedPath) -> Scalar {
    match flavor {
        Flavor::A => gf_a(p.path()),
        Flavor::B => gf_b(p),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TileRecord {
    pub h: i32,
    pub start_x: i32,
    pub profile: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingRecord {
    pub tiles: Vec<TileRecord>,
    pub weight: Scalar,
}

/// Serialized list of tilings above a (dotted) path. For type B only the
/// admissible tilings are listed; weights exclude the dot prefactor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingSet {
    pub mu: String,
    pub dots: Vec<[u32; 2]>,
    pub tilings: Vec<TilingRecord>,
}

impl TilingSet {
    pub fn build(flavor: Flavor, p: &DottedPath) -> Self {
        let dotted = match flavor {
            Flavor::A => &[][..],
            Flavor::B => p.dotted(),
        };
        let tilings = enumerate_tilings(p.path())
            .into_iter()
            .filter(|t| admissible(t, dotted))
            .map(|t| TilingRecord {
                weight: tiling_weight(&t, flavor),
                tiles: t
                    .tiles
                    .iter()
                    .map(|d| TileRecord {
                        h: d.h,
                        start_x: d.start_x,
                        profile: d.profile.to_string(),
                    })
                    .collect(),
            })
            .collect();
        Self {
            mu: p.path().to_string(),
            dots: dotted.iter().map(|&(i, j)| [i, j]).collect(),
            tilings,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn cell(x: i32, y: i32) -> Cell {
        Cell { x, y }
    }

    #[test]
    fn regions() {
        assert!(region_cells(&DyckPath::top(4)).is_empty());
        assert_eq!(region_cells(&path("URUR")), [cell(2, 1)].into_iter().collect());
        assert_eq!(
            region_cells(&path("URUURRUR")),
            [cell(2, 1), cell(3, 2), cell(4, 3), cell(5, 2), cell(6, 1)].into_iter().collect()
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_tilings(&DyckPath::top(3)).len(), 1);
        assert_eq!(enumerate_tilings(&path("URURUR")).len(), 2);
        assert_eq!(enumerate_tilings(&path("URURURURUR")).len(), 12);
        assert_eq!(enumerate_tilings(&path("URUURRUR")).len(), 3);
    }

    #[test]
    fn example_path_sum() {
        assert_eq!(gf_a(&path("URURUR")), qratio(2, 3));
        assert!(gf_a(&DyckPath::top(5)).is_one());
    }

    #[test]
    fn singleton_region() {
        let ts = enumerate_tilings(&path("URUR"));
        assert_eq!(ts.len(), 1);
        assert_eq!(tiling_weight(&ts[0], Flavor::A), qratio(1, 2));
    }

    #[test]
    fn dotted_restriction() {
        let p = DottedPath::parse("URUURRUR", Some("3-6")).unwrap();
        let ts = enumerate_tilings(p.path());
        let big = ts.iter().find(|t| t.tiles().len() == 1).unwrap();
        assert_eq!(big.tiles()[0].size(), 2);
        assert!(!admissible(big, p.dotted()));
        let singles = ts.iter().find(|t| t.tiles().len() == 5).unwrap();
        assert!(admissible(singles, p.dotted()));
        assert!(ts.iter().all(|t| admissible(t, &[])));
        let expected = &(&Scalar::from_poly(crate::scalar::quantum(2)) * &qratio_b(1, 4)) * &qratio_b(0, 2);
        assert_eq!(gf_b(&p), expected);
    }

    #[test]
    fn larger_tile_over_small_dotted_cap() {
        // a size-2 tile spanning the dotted cap (3,4) is excluded as well
        let p = DottedPath::parse("URURURUR", Some("3-4")).unwrap();
        let ts = enumerate_tilings(p.path());
        assert_eq!(ts.len(), 4);
        let kept: Vec<Vec<usize>> = ts
            .iter()
            .filter(|t| admissible(t, p.dotted()))
            .map(|t| t.tiles().iter().map(DyckTile::size).collect())
            .collect();
        assert_eq!(kept.len(), 2);
        assert!(kept.iter().all(|sizes| !sizes.contains(&2)));
        let two = Scalar::from_poly(crate::scalar::quantum(2));
        assert_eq!(gf_b(&p), &(&two * &qratio_b(1, 3)) * &qratio_b(0, 4));
    }

    #[test]
    fn dotted_identity_and_double_dot() {
        let p = DottedPath::parse("UURR", Some("1-4")).unwrap();
        assert_eq!(gf_b(&p), qratio_b(0, 1));
        let p = DottedPath::parse("URUR", Some("1-2,3-4")).unwrap();
        assert_eq!(gf_b(&p), &qratio_b(0, 2) * &qratio_b(0, 1));
    }

    #[test]
    fn tiling_set_json() {
        let p = DottedPath::parse("URUURRUR", Some("3-6")).unwrap();
        let set = TilingSet::build(Flavor::B, &p);
        assert_eq!(set.tilings.len(), 2);
        let json = serde_json::to_string(&set).unwrap();
        assert!(json.starts_with(r#"{"mu":"URUURRUR","dots":[[3,6]],"tilings":[{"tiles":[{"h":1,"start_x":2,"profile":""}"#), "{json}");
        let back: TilingSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, set);
    }
}
