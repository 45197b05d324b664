//! Boundary structure of `Ω`: 8 vertices, 12 edges, 6 faces and the
//! interior, each with the closed-form restriction of `ϑ` and its maximum
//! over the region's closure.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::theta::{theta_raw, BOX_UPPER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axis {
    U,
    V,
    W,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::U, Axis::V, Axis::W];

    pub fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> char {
        ['u', 'v', 'w'][self.index()]
    }

    fn others(self) -> [Axis; 2] {
        match self {
            Axis::U => [Axis::V, Axis::W],
            Axis::V => [Axis::U, Axis::W],
            Axis::W => [Axis::U, Axis::V],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    Low,
    High,
}

impl Side {
    fn value(self, axis: Axis) -> f64 {
        match self {
            Side::Low => 0.0,
            Side::High => BOX_UPPER[axis.index()],
        }
    }
}

/// A cell of the face lattice of `Ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionId {
    /// Sides of `u`, `v`, `w`.
    Vertex([Side; 3]),
    /// `fixed` holds the sides of the two non-free axes, in `u, v, w` order.
    Edge { free: Axis, fixed: [Side; 2] },
    Face { axis: Axis, side: Side },
    Interior,
}

const SIDES: [Side; 2] = [Side::Low, Side::High];

impl RegionId {
    /// All 27 regions: vertices, edges, faces, interior.
    pub fn all() -> Vec<RegionId> {
        let mut out = Vec::with_capacity(27);
        for a in SIDES {
            for b in SIDES {
                for c in SIDES {
                    out.push(RegionId::Vertex([a, b, c]));
                }
            }
        }
        for free in Axis::ALL {
            for a in SIDES {
                for b in SIDES {
                    out.push(RegionId::Edge { free, fixed: [a, b] });
                }
            }
        }
        for axis in Axis::ALL {
            for side in SIDES {
                out.push(RegionId::Face { axis, side });
            }
        }
        out.push(RegionId::Interior);
        out
    }

    /// Dense index in `0..27`, consistent with [`RegionId::all`].
    pub fn index(&self) -> usize {
        let s = |x: Side| x as usize;
        match *self {
            RegionId::Vertex([a, b, c]) => 4 * s(a) + 2 * s(b) + s(c),
            RegionId::Edge { free, fixed: [a, b] } => 8 + 4 * free.index() + 2 * s(a) + s(b),
            RegionId::Face { axis, side } => 20 + 2 * axis.index() + s(side),
            RegionId::Interior => 26,
        }
    }

    /// The region whose relative interior contains `p`.
    pub fn classify(p: &[f64; 3]) -> RegionId {
        let side = |i: usize| {
            if p[i] <= 0.0 {
                Some(Side::Low)
            } else if p[i] >= BOX_UPPER[i] {
                Some(Side::High)
            } else {
                None
            }
        };
        match (side(0), side(1), side(2)) {
            (Some(a), Some(b), Some(c)) => RegionId::Vertex([a, b, c]),
            (None, Some(b), Some(c)) => RegionId::Edge { free: Axis::U, fixed: [b, c] },
            (Some(a), None, Some(c)) => RegionId::Edge { free: Axis::V, fixed: [a, c] },
            (Some(a), Some(b), None) => RegionId::Edge { free: Axis::W, fixed: [a, b] },
            (Some(a), None, None) => RegionId::Face { axis: Axis::U, side: a },
            (None, Some(b), None) => RegionId::Face { axis: Axis::V, side: b },
            (None, None, Some(c)) => RegionId::Face { axis: Axis::W, side: c },
            (None, None, None) => RegionId::Interior,
        }
    }

    /// Case label of the vertex/edge/face/interior enumeration.
    pub fn case_label(&self) -> &'static str {
        use Axis::*;
        use Side::*;
        match *self {
            RegionId::Vertex(_) => "A",
            RegionId::Edge { free: W, fixed: [Low, Low] } => "B(i)",
            RegionId::Edge { free: W, fixed: [Low, High] } => "B(ii)",
            RegionId::Edge { free: V, fixed: [Low, Low] } => "B(iii)",
            RegionId::Edge { free: V, fixed: [Low, High] } => "B(iv)",
            RegionId::Edge { free: U, fixed: [Low, High] } => "B(v)",
            RegionId::Edge { free: U, fixed: [High, _] } => "B(vi)",
            RegionId::Edge { .. } => "B(vii)",
            RegionId::Face { axis: U, side: High } => "C(i)",
            RegionId::Face { axis: U, side: Low } => "C(ii)",
            RegionId::Face { axis: V, side: Low } => "C(iii)",
            RegionId::Face { axis: V, side: High } => "C(iv)",
            RegionId::Face { axis: W, side: Low } => "C(v)",
            RegionId::Face { axis: W, side: High } => "C(vi)",
            RegionId::Interior => "D",
        }
    }

    /// Fixed coordinates as `Some(value)`, free ones as `None`.
    pub fn fixed_coords(&self) -> [Option<f64>; 3] {
        let mut out = [None; 3];
        match *self {
            RegionId::Vertex(sides) => {
                for axis in Axis::ALL {
                    out[axis.index()] = Some(sides[axis.index()].value(axis));
                }
            }
            RegionId::Edge { free, fixed } => {
                for (axis, side) in free.others().into_iter().zip(fixed) {
                    out[axis.index()] = Some(side.value(axis));
                }
            }
            RegionId::Face { axis, side } => out[axis.index()] = Some(side.value(axis)),
            RegionId::Interior => {}
        }
        out
    }

    /// Maps `t ∈ [0,1]³` into the region's closure (free axes scaled, fixed axes pinned).
    pub fn embed(&self, t: [f64; 3]) -> [f64; 3] {
        let fixed = self.fixed_coords();
        std::array::from_fn(|i| fixed[i].unwrap_or(t[i] * BOX_UPPER[i]))
    }

    /// Closed-form restriction of `ϑ` to this region.
    pub fn restriction(&self) -> Restriction {
        restriction_for(*self)
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fixed = self.fixed_coords();
        let pins: Vec<String> = Axis::ALL
            .iter()
            .filter_map(|a| fixed[a.index()].map(|x| format!("{}={}", a.name(), x)))
            .collect();
        if pins.is_empty() {
            write!(f, "{} interior", self.case_label())
        } else {
            write!(f, "{} {}", self.case_label(), pins.join(","))
        }
    }
}

impl Serialize for RegionId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Restricted formula of `ϑ` with its maximum over the region's closure.
#[derive(Clone, Copy, Debug)]
pub struct Restriction {
    pub formula: &'static str,
    /// Evaluates at a full `(u, v, w)`; only the free coordinates are read.
    pub eval: fn(&[f64; 3]) -> f64,
    pub max: f64,
    /// Lexicographically smallest maximizer on the closure.
    pub argmax: [f64; 3],
    /// Justification of `max` in one line.
    pub note: &'static str,
}

fn b3_argmax() -> f64 {
    (3.0f64 / 7.0).sqrt()
}

/// `192·√(3/7)`.
pub fn b3_max() -> f64 {
    192.0 * b3_argmax()
}

fn vertex_restriction(p: [f64; 3]) -> Restriction {
    // Vertex values are plain evaluations; the table keeps them as
    // static formulas for the report.
    let value = theta_raw(&p[0], &p[1], &p[2]);
    let formula = match value as i64 {
        240 => "240",
        64 => "64",
        _ => "0",
    };
    let eval: fn(&[f64; 3]) -> f64 = match value as i64 {
        240 => |_| 240.0,
        64 => |_| 64.0,
        _ => |_| 0.0,
    };
    Restriction {
        formula,
        eval,
        max: value,
        argmax: p,
        note: "vertex value",
    }
}

fn zero_restriction(region: RegionId) -> Restriction {
    Restriction {
        formula: "0",
        eval: |_| 0.0,
        max: 0.0,
        argmax: region.embed([0.0; 3]),
        note: "prefactor (4-u^2)^2 or every bracket term vanishes",
    }
}

fn restriction_for(region: RegionId) -> Restriction {
    if let RegionId::Vertex(_) = region {
        return vertex_restriction(region.embed([0.0; 3]));
    }
    match region.case_label() {
        "B(i)" => Restriction {
            formula: "240 w^2",
            eval: |p| 240.0 * p[2] * p[2],
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "increasing in w",
        },
        "B(ii)" => Restriction {
            formula: "64",
            eval: |_| 64.0,
            max: 64.0,
            argmax: [0.0, 1.0, 0.0],
            note: "constant",
        },
        "B(iii)" => Restriction {
            formula: "32 v (9 - 7 v^2)",
            eval: |p| 32.0 * p[1] * (9.0 - 7.0 * p[1] * p[1]),
            max: b3_max(),
            argmax: [0.0, b3_argmax(), 0.0],
            note: "stationary at v = sqrt(3/7)",
        },
        "B(iv)" => Restriction {
            formula: "240 - 192 v^2 + 64 v^3 - 48 v^4",
            eval: |p| {
                let v = p[1];
                240.0 - 192.0 * v * v + 64.0 * v.powi(3) - 48.0 * v.powi(4)
            },
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "decreasing on [0,1]",
        },
        "B(v)" => Restriction {
            formula: "15 (4 - u^2)^2",
            eval: |p| 15.0 * (4.0 - p[0] * p[0]).powi(2),
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "decreasing on [0,2]",
        },
        "B(vi)" => Restriction {
            formula: "(4 - u^2)^2 (4 + 2 u^2)",
            eval: |p| {
                let u2 = p[0] * p[0];
                (4.0 - u2).powi(2) * (4.0 + 2.0 * u2)
            },
            max: 64.0,
            argmax: [0.0, 1.0, 0.0],
            note: "decreasing on [0,2]; independent of w",
        },
        "B(vii)" | "C(i)" => zero_restriction(region),
        "C(ii)" => Restriction {
            formula: "288 v - 224 v^3 + 48 (5 - v) (v - 1)^2 (1 + v) w^2",
            eval: |p| {
                let (v, w) = (p[1], p[2]);
                288.0 * v - 224.0 * v.powi(3)
                    + 48.0 * (5.0 - v) * (v - 1.0).powi(2) * (1.0 + v) * w * w
            },
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "increasing in w; at w = 1 reduces to B(iv)",
        },
        "C(iii)" => Restriction {
            formula: "15 (4 - u^2)^2 w^2",
            eval: |p| 15.0 * (4.0 - p[0] * p[0]).powi(2) * p[2] * p[2],
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "<= 15 (4 - u^2)^2 <= 240",
        },
        "C(iv)" => Restriction {
            formula: "(4 - u^2)^2 (4 + 2 u^2)",
            eval: |p| {
                let u2 = p[0] * p[0];
                (4.0 - u2).powi(2) * (4.0 + 2.0 * u2)
            },
            max: 64.0,
            argmax: [0.0, 1.0, 0.0],
            note: "independent of w; same profile as B(vi)",
        },
        "C(v)" => Restriction {
            formula: "(4 - u^2)^2 (18 v - 14 v^3 + u^2 (3 v^2/4 + v^3/2 + 3 v^4/4))",
            eval: |p| {
                let (u, v) = (p[0], p[1]);
                (4.0 - u * u).powi(2)
                    * (18.0 * v - 14.0 * v.powi(3)
                        + u * u * (0.75 * v * v + 0.5 * v.powi(3) + 0.75 * v.powi(4)))
            },
            max: b3_max(),
            argmax: [0.0, b3_argmax(), 0.0],
            note: "<= (4 - u^2)^2 (12 sqrt(3/7) + 2 u^2) <= 192 sqrt(3/7)",
        },
        "C(vi)" => Restriction {
            formula: "g3(u, v) = theta(u, v, 1)",
            eval: |p| crate::critical::g3(p[0], p[1]),
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "no critical point in (0,2)x(0,1); maximum on the boundary",
        },
        _ => Restriction {
            formula: "theta(u, v, w)",
            eval: |p| theta_raw(&p[0], &p[1], &p[2]),
            max: 240.0,
            argmax: [0.0, 0.0, 1.0],
            note: "d(theta)/dw > 0 inside; supremum attained on the boundary",
        },
    }
}
