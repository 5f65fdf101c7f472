//! Diagram words over a thickened punctured disk.
//!
//! A framed-link diagram is encoded as a closed word of elementary columns
//! read left to right. Each column acts on a stack of horizontal wires,
//! positions counted from the bottom starting at 0:
//!
//! * `cup p` inserts a nested pair of new wires at positions `p`, `p+1`;
//! * `cap p` joins the wires at positions `p`, `p+1`;
//! * `over p` / `under p` cross the wires at `p`, `p+1` (the strand moving
//!   up from `p` passes over, respectively under, the other);
//! * `punct i l` marks the moment the sweep passes puncture `i`: the cut arc
//!   of the puncture runs from the puncture downward out of the disk, and the
//!   wires at positions `0..l` cross it.
//!
//! A closed word starts and ends with an empty stack and passes each
//! puncture exactly once, in increasing order of index. Crossingless words
//! resolve into a disjoint union of trivial circles and an embedded
//! multicurve; each loop yields a cyclic word in the letters `x_i`
//! (one letter per cut-arc crossing, positive when the strand moves
//! rightward), and the fully cyclically reduced word is a complete isotopy
//! invariant of the unoriented curve.

use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Errors from word parsing, validation, and tracing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("column {column}: {msg}")]
    Validation { column: usize, msg: String },
    #[error("column {column}: crossing present in a crossingless operation")]
    HasCrossings { column: usize },
}

/// The ambient surface: a disk with `punctures` marked points, optionally
/// carrying a separating wall with `split` punctures to its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    pub punctures: u32,
    pub split: Option<u32>,
}

impl SurfaceSpec {
    pub fn disk(punctures: u32) -> Self {
        SurfaceSpec { punctures, split: None }
    }

    pub fn with_split(punctures: u32, split: u32) -> Self {
        assert!(split <= punctures, "split exceeds puncture count");
        SurfaceSpec { punctures, split: Some(split) }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surface {}", self.punctures)?;
        if let Some(s) = self.split {
            write!(f, " split {}", s)?;
        }
        Ok(())
    }
}

/// One elementary column of a diagram word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    Cup(usize),
    Cap(usize),
    Over(usize),
    Under(usize),
    Punct { index: u32, level: usize },
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Cup(p) => write!(f, "cup {}", p),
            Column::Cap(p) => write!(f, "cap {}", p),
            Column::Over(p) => write!(f, "over {}", p),
            Column::Under(p) => write!(f, "under {}", p),
            Column::Punct { index, level } => write!(f, "punct {} {}", index, level),
        }
    }
}

/// A validated closed diagram word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramWord {
    surface: SurfaceSpec,
    columns: Vec<Column>,
}

/// Stack sizes along a column sequence; errors carry the offending column
/// index and a message.
fn simulate(surface: &SurfaceSpec, columns: &[Column]) -> Result<Vec<usize>, (usize, String)> {
    let mut size = 0usize;
    let mut sizes = Vec::with_capacity(columns.len() + 1);
    sizes.push(0);
    let mut next_punct = 1u32;
    for (ci, col) in columns.iter().enumerate() {
        match *col {
            Column::Cup(p) => {
                if p > size {
                    return Err((ci, format!("cup position {} exceeds stack size {}", p, size)));
                }
                size += 2;
            }
            Column::Cap(p) => {
                if p + 1 >= size {
                    return Err((ci, format!("cap position {} needs two wires, stack size {}", p, size)));
                }
                size -= 2;
            }
            Column::Over(p) | Column::Under(p) => {
                if p + 1 >= size {
                    return Err((ci, format!("crossing position {} needs two wires, stack size {}", p, size)));
                }
            }
            Column::Punct { index, level } => {
                if index == 0 || index > surface.punctures {
                    return Err((ci, format!("puncture index {} out of range 1..={}", index, surface.punctures)));
                }
                if index != next_punct {
                    return Err((ci, format!("puncture {} out of order, expected {}", index, next_punct)));
                }
                next_punct += 1;
                if level > size {
                    return Err((ci, format!("puncture level {} exceeds stack size {}", level, size)));
                }
            }
        }
        sizes.push(size);
    }
    if size != 0 {
        return Err((columns.len(), format!("word leaves {} open wires", size)));
    }
    if next_punct != surface.punctures + 1 {
        return Err((columns.len(), format!("word passes {} of {} punctures", next_punct - 1, surface.punctures)));
    }
    Ok(sizes)
}

impl DiagramWord {
    /// Builds a word, checking closedness, stack bounds, and the
    /// once-each-in-order puncture rule.
    pub fn new(surface: SurfaceSpec, columns: Vec<Column>) -> Result<Self, WordError> {
        simulate(&surface, &columns)
            .map_err(|(column, msg)| WordError::Validation { column, msg })?;
        Ok(DiagramWord { surface, columns })
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn crossing_count(&self) -> usize {
        crossing_count(&self.columns)
    }

    pub fn is_crossingless(&self) -> bool {
        self.crossing_count() == 0
    }

    /// Largest stack size attained.
    pub fn max_stack(&self) -> usize {
        let sizes = simulate(&self.surface, &self.columns).expect("validated word");
        sizes.into_iter().max().unwrap_or(0)
    }

    /// Stack size just before the column at index `at` (`at` may equal the
    /// word length, giving the final size 0).
    pub fn stack_size_at(&self, at: usize) -> usize {
        let sizes = simulate(&self.surface, &self.columns).expect("validated word");
        sizes[at]
    }

    /// Resolves a crossingless word into its trivial-circle count and
    /// embedded multicurve.
    pub fn trace_multicurve(&self) -> Result<(usize, Multicurve), WordError> {
        trace(&self.surface, &self.columns)
    }

    /// Parses the textual format: a `surface n [split s]` header followed by
    /// one column token group per whitespace-separated run; `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut tokens: Vec<(usize, usize, &str)> = Vec::new();
        for (li, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(h) => &line[..h],
                None => line,
            };
            let mut col = 0;
            for piece in line.split_whitespace() {
                let at = line[col..].find(piece).unwrap() + col;
                tokens.push((li + 1, at + 1, piece));
                col = at + piece.len();
            }
        }
        let mut pos = 0usize;
        let syntax = |line: usize, col: usize, msg: String| WordError::Syntax { line, col, msg };
        let eof = |tokens: &[(usize, usize, &str)]| {
            let (l, c, t) = tokens.last().copied().unwrap_or((1, 1, ""));
            (l, c + t.len())
        };
        let take_u64 = |pos: &mut usize, what: &str| -> Result<u64, WordError> {
            if *pos >= tokens.len() {
                let (l, c) = eof(&tokens);
                return Err(syntax(l, c, format!("expected {}", what)));
            }
            let (l, c, t) = tokens[*pos];
            *pos += 1;
            t.parse::<u64>()
                .map_err(|_| syntax(l, c, format!("expected {}, found {:?}", what, t)))
        };
        if tokens.is_empty() {
            return Err(syntax(1, 1, "expected surface header".into()));
        }
        if tokens[0].2 != "surface" {
            return Err(syntax(tokens[0].0, tokens[0].1, format!("expected surface header, found {:?}", tokens[0].2)));
        }
        pos += 1;
        let punctures = take_u64(&mut pos, "puncture count")? as u32;
        let mut split = None;
        if pos < tokens.len() && tokens[pos].2 == "split" {
            pos += 1;
            let s = take_u64(&mut pos, "split position")? as u32;
            if s > punctures {
                let (l, c, _) = tokens[pos - 1];
                return Err(syntax(l, c, format!("split {} exceeds puncture count {}", s, punctures)));
            }
            split = Some(s);
        }
        let mut columns = Vec::new();
        let mut places = Vec::new();
        while pos < tokens.len() {
            let (l, c, t) = tokens[pos];
            pos += 1;
            let col = match t {
                "cup" => Column::Cup(take_u64(&mut pos, "position")? as usize),
                "cap" => Column::Cap(take_u64(&mut pos, "position")? as usize),
                "over" => Column::Over(take_u64(&mut pos, "position")? as usize),
                "under" => Column::Under(take_u64(&mut pos, "position")? as usize),
                "punct" => {
                    let index = take_u64(&mut pos, "puncture index")? as u32;
                    let level = take_u64(&mut pos, "level")? as usize;
                    Column::Punct { index, level }
                }
                other => {
                    return Err(syntax(l, c, format!("unknown column {:?}", other)));
                }
            };
            columns.push(col);
            places.push((l, c));
        }
        let surface = SurfaceSpec { punctures, split };
        simulate(&surface, &columns).map_err(|(ci, msg)| {
            let (l, c) = places.get(ci).copied().unwrap_or_else(|| eof(&tokens));
            syntax(l, c, msg)
        })?;
        Ok(DiagramWord { surface, columns })
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.surface)?;
        for col in &self.columns {
            writeln!(f, "{}", col)?;
        }
        Ok(())
    }
}

pub(crate) fn crossing_count(columns: &[Column]) -> usize {
    columns
        .iter()
        .filter(|c| matches!(c, Column::Over(_) | Column::Under(_)))
        .count()
}

/// One cut-arc crossing along a curve: the letter `x_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub puncture: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(puncture: u32) -> Self {
        Letter { puncture, inverse: false }
    }

    pub fn flipped(self) -> Self {
        Letter { puncture: self.puncture, inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.puncture)
        } else {
            write!(f, "x{}", self.puncture)
        }
    }
}

/// Isotopy class of an embedded non-trivial closed curve, held as the
/// canonical representative of its cyclically reduced cyclic word: the
/// lexicographically least among all rotations of the word and of its
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    word: Vec<Letter>,
}

impl CurveClass {
    /// Canonical class of a cyclic letter word; `None` when the word
    /// cyclically reduces to nothing (a trivial circle).
    pub fn from_cyclic(letters: Vec<Letter>) -> Option<Self> {
        let reduced = cyclic_reduce(letters);
        if reduced.is_empty() {
            return None;
        }
        Some(CurveClass { word: canonical_rotation(reduced) })
    }

    /// Class of the positive word `x_{i1} ... x_{ik}`.
    pub fn from_punctures(indices: &[u32]) -> Option<Self> {
        Self::from_cyclic(indices.iter().map(|&i| Letter::new(i)).collect())
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Minimal number of crossings with a separating wall placed after the
    /// first `split` punctures: the count of cyclically adjacent letter pairs
    /// whose punctures lie on opposite sides.
    pub fn wall_crossings(&self, split: u32) -> usize {
        let n = self.word.len();
        (0..n)
            .filter(|&i| {
                let a = self.word[i].puncture <= split;
                let b = self.word[(i + 1) % n].puncture <= split;
                a != b
            })
            .count()
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.word {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

fn cyclic_reduce(letters: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().copied() == Some(l.flipped()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    while out.len() >= 2 && out.first().copied() == out.last().map(|l| l.flipped()) {
        out.pop();
        out.remove(0);
    }
    out
}

fn canonical_rotation(word: Vec<Letter>) -> Vec<Letter> {
    let n = word.len();
    let inverted: Vec<Letter> = word.iter().rev().map(|l| l.flipped()).collect();
    let mut best: Option<Vec<Letter>> = None;
    for base in [&word, &inverted] {
        for r in 0..n {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&base[r..]);
            rot.extend_from_slice(&base[..r]);
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// A finite embedded multicurve: a multiset of curve classes. Trivial
/// circles are never stored; the empty multicurve is the basis element of
/// the empty diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multicurve {
    curves: Vec<CurveClass>,
}

impl Multicurve {
    pub fn empty() -> Self {
        Multicurve { curves: Vec::new() }
    }

    pub fn single(curve: CurveClass) -> Self {
        Multicurve { curves: vec![curve] }
    }

    pub fn from_curves(mut curves: Vec<CurveClass>) -> Self {
        curves.sort();
        Multicurve { curves }
    }

    pub fn curves(&self) -> &[CurveClass] {
        &self.curves
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Total letter count over all component curves.
    pub fn total_length(&self) -> usize {
        self.curves.iter().map(|c| c.len()).sum()
    }

    /// Sum of component wall crossings; see [`CurveClass::wall_crossings`].
    pub fn wall_crossings(&self, split: u32) -> usize {
        self.curves.iter().map(|c| c.wall_crossings(split)).sum()
    }

    /// Disjoint union of two multicurves.
    pub fn union(&self, other: &Self) -> Self {
        let mut curves = self.curves.clone();
        curves.extend(other.curves.iter().cloned());
        Self::from_curves(curves)
    }
}

impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for c in &self.curves {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "{}", c)?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Leg {
    Lower,
    Upper,
}

impl Leg {
    fn other(self) -> Leg {
        match self {
            Leg::Lower => Leg::Upper,
            Leg::Upper => Leg::Lower,
        }
    }
}

struct Wire {
    cup: (usize, Leg),
    cap: (usize, Leg),
    letters: Vec<Letter>,
}

/// Resolves a crossingless column sequence into trivial circles and an
/// embedded multicurve. Every wire runs from a cup leg to a cap leg; loops
/// alternate rightward and leftward wire traversals, and leftward traversal
/// reverses and inverts the collected letters.
pub(crate) fn trace(surface: &SurfaceSpec, columns: &[Column]) -> Result<(usize, Multicurve), WordError> {
    simulate(surface, columns).map_err(|(column, msg)| WordError::Validation { column, msg })?;
    if let Some(ci) = columns
        .iter()
        .position(|c| matches!(c, Column::Over(_) | Column::Under(_)))
    {
        return Err(WordError::HasCrossings { column: ci });
    }

    struct Partial {
        cup: (usize, Leg),
        letters: Vec<Letter>,
    }
    let mut stack: Vec<Partial> = Vec::new();
    let mut wires: Vec<Wire> = Vec::new();
    for (ci, col) in columns.iter().enumerate() {
        match *col {
            Column::Cup(p) => {
                stack.insert(p, Partial { cup: (ci, Leg::Lower), letters: Vec::new() });
                stack.insert(p + 1, Partial { cup: (ci, Leg::Upper), letters: Vec::new() });
            }
            Column::Cap(p) => {
                let upper = stack.remove(p + 1);
                let lower = stack.remove(p);
                wires.push(Wire { cup: lower.cup, cap: (ci, Leg::Lower), letters: lower.letters });
                wires.push(Wire { cup: upper.cup, cap: (ci, Leg::Upper), letters: upper.letters });
            }
            Column::Punct { index, level } => {
                for wire in stack.iter_mut().take(level) {
                    wire.letters.push(Letter::new(index));
                }
            }
            Column::Over(_) | Column::Under(_) => unreachable!("checked above"),
        }
    }

    let mut cup_port: HashMap<(usize, Leg), usize> = HashMap::new();
    let mut cap_port: HashMap<(usize, Leg), usize> = HashMap::new();
    for (wi, w) in wires.iter().enumerate() {
        cup_port.insert(w.cup, wi);
        cap_port.insert(w.cap, wi);
    }

    let mut visited = vec![false; wires.len()];
    let mut trivial = 0usize;
    let mut curves = Vec::new();
    for start in 0..wires.len() {
        if visited[start] {
            continue;
        }
        let mut letters = Vec::new();
        let mut wi = start;
        let mut forward = true;
        loop {
            visited[wi] = true;
            let w = &wires[wi];
            if forward {
                letters.extend(w.letters.iter().copied());
                let (cap_col, leg) = w.cap;
                wi = cap_port[&(cap_col, leg.other())];
                forward = false;
            } else {
                letters.extend(w.letters.iter().rev().map(|l| l.flipped()));
                let (cup_col, leg) = w.cup;
                wi = cup_port[&(cup_col, leg.other())];
                forward = true;
            }
            if wi == start {
                break;
            }
        }
        match CurveClass::from_cyclic(letters) {
            Some(c) => curves.push(c),
            None => trivial += 1,
        }
    }
    Ok((trivial, Multicurve::from_curves(curves)))
}
