//! Brute-force enumeration of periodic `[g-1,-1]` and `[g-1,0,-1]` bridges.
//!
//! A path is a linear step sequence read as one period of a periodic path. It
//! is stored in canonical form: the start floor is chosen so that the lowest
//! floor visited over the cycle is floor 1. Distinct rotations are distinct
//! paths.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::coefficients::FloorCountTable;
use crate::compositions::{check_order, GComposition, MixedComposition};
use crate::error::{domain, Error, Result};
use crate::limits::Limits;

/// One step of a path. The derived order `Up < Level < Down` is the
/// enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Rise by `g - 1`.
    Up,
    /// Stay on the same floor (Motzkin paths only).
    Level,
    /// Fall by 1.
    Down,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        match c {
            'U' | 'u' => Ok(Step::Up),
            'L' | 'l' | 'H' | 'h' => Ok(Step::Level),
            'D' | 'd' => Ok(Step::Down),
            _ => domain(format!("unknown step symbol {c:?}")),
        }
    }

    fn rise(self, g: u32) -> i64 {
        match self {
            Step::Up => g as i64 - 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }
}

/// Which step set a path is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// Up and Down steps only.
    Dyck,
    /// Up, Level and Down steps.
    Motzkin,
}

/// A canonical periodic bridge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    g: u32,
    kind: PathKind,
    start_floor: u32,
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates the step sequence and places it in canonical form.
    pub fn new(steps: Vec<Step>, g: u32, kind: PathKind) -> Result<Self> {
        check_order(g)?;
        if steps.is_empty() {
            return domain("a path needs at least one step");
        }
        if kind == PathKind::Dyck && steps.contains(&Step::Level) {
            return domain("level steps are only allowed in Motzkin paths");
        }
        let mut h = 0i64;
        let mut low = 0i64;
        for s in &steps {
            h += s.rise(g);
            low = low.min(h);
        }
        if h != 0 {
            return domain(format!("not a bridge: net rise {h}"));
        }
        Ok(LatticePath {
            g,
            kind,
            start_floor: (1 - low) as u32,
            steps,
        })
    }

    /// Parses `"3:UDUDD"` or `"UDUDD"`. A given start floor must equal the
    /// canonical one.
    pub fn parse(text: &str, g: u32, kind: PathKind) -> Result<Self> {
        let text = text.trim();
        let (floor, body) = match text.split_once(':') {
            Some((f, b)) => {
                let f: u32 = f
                    .trim()
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad start floor in {text:?}")))?;
                (Some(f), b)
            }
            None => (None, text),
        };
        let steps = body
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(Step::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        let path = Self::new(steps, g, kind)?;
        if let Some(f) = floor {
            if f != path.start_floor {
                return domain(format!(
                    "start floor {f} is not canonical; the lowest floor would be {}",
                    1 + f as i64 - path.start_floor as i64
                ));
            }
        }
        Ok(path)
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn start_floor(&self) -> u32 {
        self.start_floor
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first_step(&self) -> Step {
        self.steps[0]
    }

    /// Floor from which each step departs.
    pub fn floors(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut h = self.start_floor as i64;
        for s in &self.steps {
            out.push(h as u32);
            h += s.rise(self.g);
        }
        out
    }

    /// The path read from step `k` onward, wrapping around.
    pub fn rotated(&self, k: usize) -> Self {
        let k = k % self.steps.len();
        let mut steps = self.steps[k..].to_vec();
        steps.extend_from_slice(&self.steps[..k]);
        Self::new(steps, self.g, self.kind).expect("rotation of a bridge is a bridge")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start_floor)?;
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Up-step counts (and, for Motzkin paths, level-step counts) per floor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum PathProfile {
    Dyck(GComposition),
    Motzkin(MixedComposition),
}

impl PathProfile {
    /// Number of floors `1..=j+g-1` the profile's paths can start from.
    pub fn floors(&self) -> usize {
        match self {
            PathProfile::Dyck(c) => c.len() + c.g() as usize - 1,
            PathProfile::Motzkin(m) => m.floors(),
        }
    }

    pub fn total(&self) -> u32 {
        match self {
            PathProfile::Dyck(c) => c.g() * c.total(),
            PathProfile::Motzkin(m) => m.total(),
        }
    }
}

impl fmt::Display for PathProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathProfile::Dyck(c) => c.fmt(f),
            PathProfile::Motzkin(m) => m.fmt(f),
        }
    }
}

fn check_limit(len: usize, limit: usize, what: &str) -> Result<()> {
    if len > limit {
        return Err(Error::Resource(format!(
            "{what} of length {len} exceeds the limit {limit}"
        )));
    }
    Ok(())
}

/// All `[g-1,-1]` bridges with `n` up steps, `binomial(gn, n)` of them, in
/// lexicographic order.
pub fn enumerate_dyck_bridges(n: u32, g: u32, limits: &Limits) -> Result<Vec<LatticePath>> {
    check_order(g)?;
    if n == 0 {
        return domain("n must be at least 1");
    }
    let len = (g * n) as usize;
    check_limit(len, limits.dyck_len, "Dyck bridge")?;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    dyck_rec(&mut steps, n as usize, len - n as usize, g, &mut out);
    Ok(out)
}

fn dyck_rec(steps: &mut Vec<Step>, ups: usize, downs: usize, g: u32, out: &mut Vec<LatticePath>) {
    if ups == 0 && downs == 0 {
        out.push(LatticePath::new(steps.clone(), g, PathKind::Dyck).expect("balanced sequence"));
        return;
    }
    for (step, left) in [(Step::Up, ups), (Step::Down, downs)] {
        if left == 0 {
            continue;
        }
        steps.push(step);
        match step {
            Step::Up => dyck_rec(steps, ups - 1, downs, g, out),
            _ => dyck_rec(steps, ups, downs - 1, g, out),
        }
        steps.pop();
    }
}

/// All `[g-1,0,-1]` bridges of length `total`, in lexicographic order.
pub fn enumerate_motzkin_bridges(total: u32, g: u32, limits: &Limits) -> Result<Vec<LatticePath>> {
    check_order(g)?;
    if total == 0 {
        return domain("path length must be at least 1");
    }
    let len = total as usize;
    check_limit(len, limits.motzkin_len, "Motzkin bridge")?;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    motzkin_rec(&mut steps, len, 0, g, &mut out);
    Ok(out)
}

/// Fewest steps that bring net height `h` back to zero.
fn steps_to_close(h: i64, g: u32) -> i64 {
    if h >= 0 {
        h
    } else {
        let rise = g as i64 - 1;
        let ups = (-h + rise - 1) / rise;
        ups + ups * rise + h
    }
}

fn motzkin_rec(steps: &mut Vec<Step>, len: usize, h: i64, g: u32, out: &mut Vec<LatticePath>) {
    let left = (len - steps.len()) as i64;
    if left == 0 {
        if h == 0 {
            out.push(LatticePath::new(steps.clone(), g, PathKind::Motzkin).expect("balanced"));
        }
        return;
    }
    for step in [Step::Up, Step::Level, Step::Down] {
        let next = h + step.rise(g);
        if steps_to_close(next, g) > left - 1 {
            continue;
        }
        steps.push(step);
        motzkin_rec(steps, len, next, g, out);
        steps.pop();
    }
}

/// Per-floor up-step counts `l_i` (and level-step counts `l~_i`).
pub fn profile_of(path: &LatticePath) -> Result<PathProfile> {
    let g = path.g;
    let floors = path.floors();
    let mut ups: Vec<u32> = Vec::new();
    let mut levels: Vec<u32> = Vec::new();
    for (s, &f) in path.steps.iter().zip(&floors) {
        let slot = match s {
            Step::Up => &mut ups,
            Step::Level => &mut levels,
            Step::Down => continue,
        };
        let idx = f as usize - 1;
        if slot.len() <= idx {
            slot.resize(idx + 1, 0);
        }
        slot[idx] += 1;
    }
    match path.kind {
        PathKind::Dyck => Ok(PathProfile::Dyck(GComposition::new(ups, g)?)),
        PathKind::Motzkin => {
            if ups.is_empty() {
                return Ok(PathProfile::Motzkin(MixedComposition::trivial(
                    path.len() as u32,
                    g,
                )?));
            }
            let width = ups.len() + g as usize - 1;
            if levels.len() > width {
                return domain(format!("level step above floor {width} in {path}"));
            }
            levels.resize(width, 0);
            Ok(PathProfile::Motzkin(MixedComposition::new(levels, ups, g)?))
        }
    }
}

/// Departure floors `i_1, ..., i_n` of the up steps, in order.
pub fn up_step_floors(path: &LatticePath) -> Vec<u32> {
    path.steps
        .iter()
        .zip(path.floors())
        .filter(|(s, _)| **s == Step::Up)
        .map(|(_, f)| f)
        .collect()
}

/// Rebuilds the up-starting Dyck bridge from floor `start` whose up steps
/// depart from `floors`, by placing up step `s` at position
/// `start - i_s + g(s-1) + 1`.
pub fn reconstruct_from_floor_sequence(start: u32, floors: &[u32], g: u32) -> Result<LatticePath> {
    check_order(g)?;
    let n = floors.len();
    if n == 0 {
        return domain("the floor sequence is empty");
    }
    if floors[0] != start {
        return domain(format!(
            "first floor {} differs from start floor {start}",
            floors[0]
        ));
    }
    if floors.iter().any(|&f| f < 1) {
        return domain("floors are numbered from 1");
    }
    for w in floors.windows(2) {
        if w[1] > w[0] + g - 1 {
            return domain(format!(
                "floor {} cannot follow floor {} (at most g - 1 = {} higher)",
                w[1],
                w[0],
                g - 1
            ));
        }
    }
    let last = floors[n - 1];
    if last + g - 1 < start {
        return domain(format!(
            "last up step from floor {last} cannot return to floor {start}"
        ));
    }
    let len = g as usize * n;
    let mut steps = vec![Step::Down; len];
    let mut prev = 0i64;
    for (s, &f) in floors.iter().enumerate() {
        let p = start as i64 - f as i64 + g as i64 * s as i64 + 1;
        if p <= prev || p > len as i64 {
            return domain(format!("up step {} lands at invalid position {p}", s + 1));
        }
        steps[p as usize - 1] = Step::Up;
        prev = p;
    }
    let path = LatticePath::new(steps, g, PathKind::Dyck)?;
    if path.start_floor != start || up_step_floors(&path) != floors {
        return domain(format!(
            "floor sequence {floors:?} does not describe a path whose lowest floor is 1"
        ));
    }
    Ok(path)
}

/// Cuts an up-starting bridge at its last down step from floor `i` and
/// exchanges the two pieces, giving a bridge that starts with that down step.
pub fn cut_and_exchange(path: &LatticePath, i: u32) -> Result<LatticePath> {
    let g = path.g;
    let start = path.start_floor;
    if path.first_step() != Step::Up {
        return domain(format!("{path} does not start with an up step"));
    }
    if !(start < i && start + g > i) {
        return domain(format!(
            "{path} starts from floor {start}, outside {}..={}",
            i as i64 - g as i64 + 1,
            i as i64 - 1
        ));
    }
    let floors = path.floors();
    let cut = (0..path.len())
        .rev()
        .find(|&k| path.steps[k] == Step::Down && floors[k] == i)
        .ok_or_else(|| Error::Domain(format!("{path} has no down step from floor {i}")))?;
    Ok(path.rotated(cut))
}

/// Groups paths by profile and counts them by first-step kind and floor.
pub fn tally_by_profile<'a>(
    paths: impl IntoIterator<Item = &'a LatticePath>,
) -> Result<BTreeMap<PathProfile, FloorCountTable>> {
    let mut out: BTreeMap<PathProfile, FloorCountTable> = BTreeMap::new();
    for path in paths {
        let profile = profile_of(path)?;
        let table = out
            .entry(profile.clone())
            .or_insert_with(|| FloorCountTable::zeros(profile.floors()));
        let Some(row) = table.floors.get_mut(path.start_floor as usize - 1) else {
            return domain(format!("{path} starts above the floors of {profile}"));
        };
        let one = BigInt::one();
        match path.first_step() {
            Step::Up => row.up += &one,
            Step::Level => row.horizontal += &one,
            Step::Down => row.down += &one,
        }
        row.any += &one;
        table.total += one;
    }
    Ok(out)
}
