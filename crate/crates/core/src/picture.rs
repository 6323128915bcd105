//! Grid pictures of tropical ideals: circuits drawn as anti-diagonal dot
//! chains, cells colored by the two initial monomial ideals, with the
//! uninformative-circuit omission rule. Renders to SVG and ASCII,
//! byte-deterministically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::ideal::TruncatedTropIdeal;
use crate::matroid::MatroidError;
use crate::monomial::{mon_d, Monomial, TermOrder};
use crate::necklace::Necklace;

/// A circuit drawn in the grid: the monomials carrying dots, sorted by
/// increasing y-exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Segment {
    pub degree: u32,
    pub members: Vec<Monomial>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CellColor {
    pub blue: bool,
    pub red: bool,
}

/// Witness that a circuit is uninformative: a lower-degree circuit and a
/// set of multiplier monomials covering it with the forced-corank count.
#[derive(Clone, Debug)]
pub struct OmissionWitness {
    pub lower_degree: u32,
    pub lower_circuit: Vec<Monomial>,
    pub multipliers: Vec<Monomial>,
}

#[derive(Clone, Debug)]
pub struct Picture {
    max_degree: u32,
    hilbert: Vec<usize>,
    cells: BTreeMap<Monomial, CellColor>,
    segments: Vec<Segment>,
    omitted: Vec<(Segment, OmissionWitness)>,
}

impl Picture {
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn cell(&self, m: &Monomial) -> CellColor {
        self.cells.get(m).copied().unwrap_or_default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn omitted(&self) -> &[(Segment, OmissionWitness)] {
        &self.omitted
    }

    /// Cells of one color, as a set: the staircase region of the relevant
    /// initial monomial ideal's complement.
    pub fn blue_cells(&self) -> BTreeSet<Monomial> {
        self.cells.iter().filter(|(_, c)| c.blue).map(|(m, _)| *m).collect()
    }

    pub fn red_cells(&self) -> BTreeSet<Monomial> {
        self.cells.iter().filter(|(_, c)| c.red).map(|(m, _)| *m).collect()
    }
}

/// Search for an omission witness for the circuit mask `s` in degree `d`:
/// a circuit S' in a lower degree d' and multipliers T of degree d - d'
/// with S inside the union of the translates m S' and
/// |S| > |union| - |T|. Masks are indexed by y-exponent, so multiplying by
/// x^a y^b shifts a mask left by b.
fn omission_witness(
    circuits_by_degree: &[Vec<u64>],
    d: u32,
    s: u64,
) -> Option<(u32, u64, Vec<u32>)> {
    let s_size = s.count_ones();
    for d_lower in 0..d {
        let shift_range = d - d_lower;
        for &lower in &circuits_by_degree[d_lower as usize] {
            // subsets of the shifts {0, .., d - d_lower}, i.e. of Mon_{d-d'}
            for t_mask in 1u64..1 << (shift_range + 1) {
                let mut union = 0u64;
                for b in 0..=shift_range {
                    if t_mask >> b & 1 == 1 {
                        union |= lower << b;
                    }
                }
                if s & !union == 0
                    && s_size > union.count_ones() - t_mask.count_ones()
                {
                    let shifts =
                        (0..=shift_range).filter(|&b| t_mask >> b & 1 == 1).collect();
                    return Some((d_lower, lower, shifts));
                }
            }
        }
    }
    None
}

pub fn build_picture(
    t: &TruncatedTropIdeal,
    omit_uninformative: bool,
) -> Result<Picture, MatroidError> {
    let max_degree = t.max_degree();
    let mut hilbert = Vec::new();
    let mut cells = BTreeMap::new();
    let mut circuits_by_degree: Vec<Vec<u64>> = Vec::new();
    for d in 0..=max_degree {
        let piece = t.piece(d);
        hilbert.push(piece.rank());
        // colors from the two initial matroids
        let blue_loops = piece.initial_loops(&TermOrder::XGreater.on_degree(d));
        let red_loops = piece.initial_loops(&TermOrder::YGreater.on_degree(d));
        let mons = mon_d(d);
        for (i, m) in mons.iter().enumerate() {
            cells.insert(
                *m,
                CellColor { blue: !blue_loops.contains(&i), red: !red_loops.contains(&i) },
            );
        }
        circuits_by_degree.push(
            piece
                .circuits()?
                .iter()
                .map(|c| c.iter().fold(0u64, |mask, &i| mask | 1 << i))
                .collect(),
        );
    }
    let mut segments = Vec::new();
    let mut omitted = Vec::new();
    for d in 0..=max_degree {
        for &mask in &circuits_by_degree[d as usize] {
            let members: Vec<Monomial> = (0..=d)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| Monomial::new(d - b, b))
                .collect();
            let segment = Segment { degree: d, members };
            match omission_witness(&circuits_by_degree, d, mask) {
                Some((d_lower, lower, shifts)) if omit_uninformative => {
                    let lower_circuit = (0..=d_lower)
                        .filter(|&b| lower >> b & 1 == 1)
                        .map(|b| Monomial::new(d_lower - b, b))
                        .collect();
                    let multipliers = shifts
                        .iter()
                        .map(|&b| Monomial::new(d - d_lower - b, b))
                        .collect();
                    omitted.push((
                        segment,
                        OmissionWitness { lower_degree: d_lower, lower_circuit, multipliers },
                    ));
                }
                _ => segments.push(segment),
            }
        }
    }
    segments.sort();
    Ok(Picture { max_degree, hilbert, cells, segments, omitted })
}

/// One character per monomial: X = both colors, B = blue only, R = red
/// only, '.' = uncolored; rows are printed with the y-axis upward.
pub fn render_ascii(p: &Picture) -> String {
    let d = p.max_degree();
    let mut out = String::new();
    for b in (0..=d).rev() {
        let _ = write!(out, "y^{b:<2}|");
        for a in 0..=d - b {
            let c = p.cell(&Monomial::new(a, b));
            let ch = match (c.blue, c.red) {
                (true, true) => 'X',
                (true, false) => 'B',
                (false, true) => 'R',
                (false, false) => '.',
            };
            let _ = write!(out, " {ch}");
        }
        out.push('\n');
    }
    let _ = write!(out, "    +");
    for _ in 0..=d {
        out.push_str("--");
    }
    out.push('\n');
    let h: Vec<String> = p.hilbert().iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "h = [{}]", h.join(", "));
    out
}

const CELL: i64 = 30;
const MARGIN: i64 = 45;

fn cell_origin(max_degree: u32, m: &Monomial) -> (i64, i64) {
    (
        MARGIN + m.a as i64 * CELL,
        MARGIN + (max_degree as i64 - m.b as i64) * CELL,
    )
}

/// Deterministic SVG: striped cells (never hue alone), circuit segments
/// with dots, Hilbert labels along the left edge.
pub fn render_svg(p: &Picture) -> String {
    let d = p.max_degree();
    let size = 2 * MARGIN + (d as i64 + 1) * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    out.push_str(concat!(
        "<defs>\n",
        r##"<pattern id="hstripe" width="6" height="6" patternUnits="userSpaceOnUse">"##,
        r##"<rect width="6" height="6" fill="white"/>"##,
        r##"<line x1="0" y1="3" x2="6" y2="3" stroke="#4477dd" stroke-width="2"/>"##,
        "</pattern>\n",
        r##"<pattern id="vstripe" width="6" height="6" patternUnits="userSpaceOnUse">"##,
        r##"<rect width="6" height="6" fill="none"/>"##,
        r##"<line x1="3" y1="0" x2="3" y2="6" stroke="#dd4444" stroke-width="2"/>"##,
        "</pattern>\n</defs>\n",
    ));
    // cells, row-major from the top
    for b in (0..=d).rev() {
        for a in 0..=d - b {
            let m = Monomial::new(a, b);
            let (x, y) = cell_origin(d, &m);
            let color = p.cell(&m);
            if color.blue {
                let _ = writeln!(
                    out,
                    r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="url(#hstripe)"/>"##
                );
            }
            if color.red {
                let _ = writeln!(
                    out,
                    r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="url(#vstripe)"/>"##
                );
            }
            let _ = writeln!(
                out,
                r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="none" stroke="#999999" stroke-width="1"/>"##
            );
        }
    }
    // circuit segments: a line between the extreme dots, a dot per member
    for s in p.segments() {
        let first = s.members.first().expect("circuits are nonempty");
        let last = s.members.last().expect("circuits are nonempty");
        let center = |m: &Monomial| {
            let (x, y) = cell_origin(d, m);
            (x + CELL / 2, y + CELL / 2)
        };
        let (x1, y1) = center(first);
        let (x2, y2) = center(last);
        if s.members.len() > 1 {
            let _ = writeln!(
                out,
                r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>"#
            );
        }
        for m in &s.members {
            let (cx, cy) = center(m);
            let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>"#);
        }
    }
    // Hilbert labels along the anti-diagonal: at the left end of each
    // degree (cell (0, d'))
    for (deg, h) in p.hilbert().iter().enumerate() {
        let (x, y) = cell_origin(d, &Monomial::new(0, deg as u32));
        let tx = x - MARGIN / 2 - 8;
        let ty = y + CELL / 2 + 5;
        let _ = writeln!(
            out,
            r#"<text x="{tx}" y="{ty}" font-family="monospace" font-size="14">{h}</text>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

/// A necklace figure: the regular d-gon with filled (black) and open
/// (white) bead circles.
pub fn render_necklace_svg(n: &Necklace) -> String {
    let d = n.beads();
    let size = 220i64;
    let center = size as f64 / 2.0;
    let radius = 80.0f64;
    let vertex = |p: u32| {
        let angle = 2.0 * std::f64::consts::PI * p as f64 / d as f64;
        (center + radius * angle.cos(), center - radius * angle.sin())
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    // polygon outline
    let pts: Vec<String> = (0..d)
        .map(|p| {
            let (x, y) = vertex(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="none" stroke="#666666" stroke-width="1"/>"##,
        pts.join(" ")
    );
    for p in 0..d {
        let (x, y) = vertex(p);
        let fill = if n.canonical_positions().contains(&p) { "black" } else { "white" };
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="9" fill="{fill}" stroke="black" stroke-width="1.5"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::GradedIdeal;

    #[test]
    fn zero_ideal_picture_is_all_both_colors() {
        let t = GradedIdeal::new(vec![]).unwrap().tropicalize(3);
        let p = build_picture(&t, true).unwrap();
        assert!(p.segments().is_empty());
        for d in 0..=3u32 {
            for m in mon_d(d) {
                assert_eq!(p.cell(&m), CellColor { blue: true, red: true });
            }
        }
        let svg = render_svg(&p);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn monomial_ideal_cells_uncolored_inside() {
        let t = GradedIdeal::parse("x^2; y^3").unwrap().tropicalize(4);
        let p = build_picture(&t, true).unwrap();
        // inside the ideal: single-dot segments at the minimal generators
        // only (other loops are forced); complement cells carry both colors
        assert_eq!(p.cell(&Monomial::new(2, 0)), CellColor { blue: false, red: false });
        assert_eq!(p.cell(&Monomial::new(1, 1)), CellColor { blue: true, red: true });
        let drawn: Vec<&Segment> = p.segments().iter().collect();
        assert_eq!(drawn.len(), 2);
        assert!(drawn.iter().all(|s| s.members.len() == 1));
    }

    #[test]
    fn principal_ideal_segments_and_omission() {
        let t = GradedIdeal::parse("x^2 - y^2").unwrap().tropicalize(4);
        let full = build_picture(&t, false).unwrap();
        let d2: Vec<&Segment> = full.segments().iter().filter(|s| s.degree == 2).collect();
        assert_eq!(d2.len(), 1);
        assert_eq!(d2[0].members, vec![Monomial::new(2, 0), Monomial::new(0, 2)]);
        let d3: Vec<&Segment> = full.segments().iter().filter(|s| s.degree == 3).collect();
        assert_eq!(d3.len(), 2);
        // with omission only the degree-2 circuit stays
        let omitted = build_picture(&t, true).unwrap();
        assert_eq!(omitted.segments().len(), 1);
        assert_eq!(omitted.segments()[0].degree, 2);
        // colors agree between the two pictures
        assert_eq!(full.blue_cells(), omitted.blue_cells());
        assert_eq!(full.red_cells(), omitted.red_cells());
    }

    #[test]
    fn omission_witnesses_certify_dependence() {
        let ideal = GradedIdeal::parse("x^3+x^2*y+2*x*y^2+3*y^3; x^5; x*y^4").unwrap();
        let t = ideal.tropicalize(7);
        let p = build_picture(&t, true).unwrap();
        assert!(!p.omitted().is_empty());
        for (segment, witness) in p.omitted() {
            // the witnessed union must have corank at least |T| in the piece
            let union: std::collections::BTreeSet<Monomial> = witness
                .multipliers
                .iter()
                .flat_map(|m| witness.lower_circuit.iter().map(move |c| c.mul(m)))
                .collect();
            let union: Vec<Monomial> = union.into_iter().collect();
            let piece = t.piece(segment.degree);
            let labels: Vec<String> = union.iter().map(|m| m.label()).collect();
            let rank = piece.rank_labels(&labels).unwrap();
            assert!(
                union.len() - rank >= witness.multipliers.len(),
                "corank of the union at least |T|"
            );
        }
    }

    #[test]
    fn renders_are_deterministic() {
        let t = GradedIdeal::parse("x^3+x^2*y+2*x*y^2+3*y^3; x^5; x*y^4")
            .unwrap()
            .tropicalize(7);
        let p1 = build_picture(&t, true).unwrap();
        let p2 = build_picture(&t, true).unwrap();
        assert_eq!(render_svg(&p1), render_svg(&p2));
        assert_eq!(render_ascii(&p1), render_ascii(&p2));
        let n = Necklace::new(6, [0u32, 1]).unwrap();
        assert_eq!(render_necklace_svg(&n), render_necklace_svg(&n));
        assert_eq!(render_necklace_svg(&n).matches("<circle").count(), 6);
    }

    #[test]
    fn ascii_marks_follow_colors() {
        let t = GradedIdeal::parse("x^2 - y^2").unwrap().tropicalize(2);
        let p = build_picture(&t, true).unwrap();
        let text = render_ascii(&p);
        // x^2 is blue only, y^2 red only, the middle cell both
        assert!(text.contains("h = [1, 2, 2]"));
        assert_eq!(p.cell(&Monomial::new(2, 0)), CellColor { blue: true, red: false });
        assert_eq!(p.cell(&Monomial::new(0, 2)), CellColor { blue: false, red: true });
        assert_eq!(p.cell(&Monomial::new(1, 1)), CellColor { blue: true, red: true });
    }
}
