//! Integer points from the necessity arguments, each paired with the extremal
//! tensor of its display.

#![allow(dead_code)]

pub struct Point {
    pub case: &'static str,
    pub t: [i8; 15],
    pub x: [i64; 3],
    pub value: i64,
}

/// Printed value does not match the printed form at the printed point.
pub struct Misprint {
    pub case: &'static str,
    pub t: [i8; 15],
    pub x: [i64; 3],
    pub printed: i64,
    pub actual: i64,
}

/// Printed as an equality.
pub const EXACT: &[Point] = &[
    Point { case: "T3.3", t: [1, -1, -1, 1, 1, 1, -1, 1, 0, -1, 1, -1, 1, -1, 1], x: [2, 2, -1], value: -63 },
    Point { case: "T3.3", t: [1, -1, -1, 1, -1, 1, -1, 1, 0, -1, 1, -1, 1, -1, 1], x: [-1, 2, 2], value: -15 },
    Point { case: "T3.3", t: [1, -1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1], x: [2, -1, 2], value: -15 },
    Point { case: "T3.5", t: [1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, 1], value: -7 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 0, 1, -1, -1, 0, 1, 1, 1, 1, -1, 1], x: [-6, 1, 3], value: -368 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 0, 1, -1, -1, -1, 1, 1, 1, 1, -1, 1], x: [3, 5, 5], value: -139 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, 1, -1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 1, 1, -1, -1, 0, 1, 1, 1, 1, -1, 1], x: [5, -5, 3], value: -139 },
    Point { case: "T3.8", t: [1, 0, 1, 1, -1, 1, 1, -1, -1, 0, 1, 0, 1, 1, 1], x: [1, 1, 1], value: -3 },
    Point { case: "T3.8", t: [1, 0, 0, 1, -1, 1, 1, -1, 1, 1, 1, 0, 1, 1, 1], x: [-3, 1, 4], value: -36 },
    Point { case: "T3.8", t: [1, -1, -1, 1, 1, 1, 0, 0, -1, 0, 1, -1, 1, 0, 1], x: [6, 4, -5], value: -263 },
    Point { case: "T3.8", t: [1, -1, -1, 1, 1, 1, 0, -1, -1, 0, 1, -1, 1, 0, 1], x: [1, 1, 1], value: -3 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1], x: [-2, 1, 1], value: -4 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0, 1, 1, 1], x: [3, -1, 3], value: -53 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1], x: [-3, 1, 3], value: -149 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 0, 0, 0, -1, 0, 1, 1, 1, 0, 1], x: [2, 1, -3], value: -20 },
    Point { case: "T3.9", t: [1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1], x: [2, -1, 1], value: -12 },
    Point { case: "T3.12", t: [1, 1, 1, 1, 1, 1, 0, 1, 0, -1, 1, 1, 1, -1, 1], x: [3, 3, -2], value: -116 },
    Point { case: "T3.12", t: [1, 1, -1, 1, 1, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [6, -5, 1], value: -1552 },
    Point { case: "T3.12", t: [1, 1, -1, 1, 0, 1, 0, 0, -1, 1, 1, 1, 1, -1, 1], x: [7, -2, 1], value: -32 },
    Point { case: "T3.12", t: [1, 1, -1, 1, 1, 1, 0, 0, -1, 1, 1, 1, 1, -1, 1], x: [4, 4, -5], value: -143 },
    Point { case: "T3.13", t: [1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1], x: [5, 1, 3], value: -19 },
    Point { case: "T3.13", t: [1, 1, -1, 1, 1, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.13", t: [1, 1, -1, 1, -1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1], x: [-1, 1, 1], value: -7 },
    Point { case: "T3.13", t: [1, 1, -1, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1], x: [4, -2, 1], value: -31 },
    Point { case: "T3.13", t: [1, 1, -1, 1, -1, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, 1, 1], value: -7 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1], x: [1, -5, 2], value: -92 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, 1], x: [1, -4, 4], value: -127 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, 1, 1, -1, 1, 1, 1, 1, 1], x: [1, -6, 6], value: -23 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 0, 0, -1, 0, 0, 1, 1, 1, -1, 1], x: [-3, 1, 1], value: -37 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 0, 1, 0, 0, 0, 1, 1, 1, -1, 1], x: [-3, 1, 3], value: -161 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, -1, 1], x: [-3, 2, 5], value: -118 },
    Point { case: "T3.14", t: [1, 1, 1, 1, 0, 1, 0, -1, -1, 0, 1, 1, 1, -1, 1], x: [1, 1, 3], value: -27 },
    Point { case: "T3.14", t: [1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, -1, 1], x: [-1, 1, 3], value: -23 },
    Point { case: "T3.14", t: [1, 1, 1, 1, 1, 1, 0, -1, -1, 0, 1, 1, 1, -1, 1], x: [1, 2, 4], value: -63 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 1, 0, 0, 1, 1, 1, 1, -1, 1], x: [-1, 1, 2], value: -12 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, -1, 1], x: [6, -4, 1], value: -79 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, 1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [6, -4, 1], value: -943 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, 0, -1, 1, 1, 1, 1, -1, 1], x: [-6, 3, 1], value: -8 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, 1], value: -7 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, -1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 1, 1, 0, -1, 1, 1, 1, -1, 1, 1, 1], x: [1, -1, 1], value: -11 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 1, 1, 0, -1, 0, 1, 1, 1, 1, -1, 1], x: [2, -5, 2], value: -599 },
    Point { case: "T3.15", t: [1, 1, 1, 1, -1, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, 1], value: -3 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 0, 1, 1, 0, -1, 1, 1, 1, 1, -1, 1], x: [6, 1, -3], value: -176 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -7 },
    Point { case: "T3.15", t: [1, 0, 1, 1, -1, 1, 1, -1, 0, 1, 1, -1, 1, 1, 1], x: [-5, 1, 2], value: -220 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, -1, 1, 1, 1], x: [5, 1, -2], value: -108 },
];

/// Printed as an upper bound.
pub const BOUNDED: &[Point] = &[
    Point { case: "T3.1", t: [1, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1], x: [-1, 2, 2], value: -63 },
    Point { case: "T3.1", t: [1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.1", t: [1, 0, 0, 0, 1, 1, 0, -1, -1, 0, 1, 0, 1, 0, 1], x: [3, 2, -2], value: -7 },
    Point { case: "T3.1", t: [1, 0, 0, 1, 1, 1, 0, -1, -1, 0, 1, 0, 0, 0, 1], x: [1, 2, 2], value: -63 },
    Point { case: "T3.1", t: [1, 0, 0, 1, 1, 1, 0, -1, 0, 0, 1, 0, 1, 0, 1], x: [3, -2, 2], value: -79 },
    Point { case: "T3.3", t: [1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1], x: [1, 1, -3], value: -35 },
    Point { case: "T3.3", t: [1, -1, -1, 1, 1, 1, -1, 0, 1, -1, 1, -1, 1, -1, 1], x: [2, -1, 2], value: -63 },
    Point { case: "T3.3", t: [1, -1, -1, 1, -1, 1, -1, 0, 1, -1, 1, -1, 1, -1, 1], x: [-1, 2, 2], value: -15 },
    Point { case: "T3.5", t: [1, -1, 1, 1, -1, 1, 1, 0, 0, 1, 1, 1, 1, -1, 1], x: [-5, 1, 3], value: -295 },
    Point { case: "T3.5", t: [1, -1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, -1, 1], x: [-1, 1, 2], value: -16 },
    Point { case: "T3.5", t: [1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1], x: [-1, 1, 2], value: -40 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 0, 1, -1, 0, -1, 1, 1, 1, 1, -1, 1], x: [3, 1, -3], value: -23 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1, -1, 1], x: [3, 1, -3], value: -239 },
    Point { case: "T3.5", t: [1, 1, 1, 1, 1, 1, -1, 0, 0, 1, 1, 1, 1, -1, 1], x: [3, 1, -3], value: -23 },
    Point { case: "T3.8", t: [1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1], x: [2, 1, -1], value: -4 },
    Point { case: "T3.8", t: [1, 0, 1, 1, 0, 1, 1, -1, -1, 0, 1, 0, 1, 1, 1], x: [2, -5, 1], value: -52 },
    Point { case: "T3.8", t: [1, -1, 0, 1, 0, 1, 0, 1, 0, -1, 1, -1, 1, 0, 1], x: [-1, 3, 1], value: -3 },
    Point { case: "T3.8", t: [1, -1, 0, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, 1], x: [4, 2, 1], value: -167 },
    Point { case: "T3.8", t: [1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1], x: [-1, 2, 1], value: -4 },
    Point { case: "T3.8", t: [1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.8", t: [1, -1, -1, 1, 0, 1, 0, 1, 0, 0, 1, -1, 1, 0, 1], x: [-1, 4, 2], value: -95 },
    Point { case: "T3.8", t: [1, -1, -1, 1, 1, 1, 0, 1, 0, 0, 1, -1, 1, 0, 1], x: [4, 3, -1], value: -60 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1], x: [2, -1, 2], value: -31 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.9", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1], x: [-3, 1, 1], value: -15 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1], x: [1, -1, 3], value: -23 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, -1, 1, 0, 1, 0, 1, 1, 1], x: [1, -1, 1], value: -11 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1], x: [2, -1, 1], value: -12 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1], x: [2, 3, -2], value: -199 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 1, 1, 0, -1, 0, 0, 1, 1, 1, 0, 1], x: [1, -1, 1], value: -11 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 1, 1, 0, 0, -1, 0, 1, 1, 1, 0, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1], x: [-3, 2, 3], value: -104 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1], x: [1, 3, -1], value: -7 },
    Point { case: "T3.9", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 0, 1, 1, 1, 0, 1], x: [1, -3, 1], value: -31 },
    Point { case: "T3.9", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1], x: [-3, 1, 1], value: -15 },
    Point { case: "T3.9", t: [1, 1, 0, 1, -1, 1, 0, -1, 0, 0, 1, 1, 1, 0, 1], x: [1, -5, 2], value: -84 },
    Point { case: "T3.9", t: [1, 1, 0, 1, -1, 1, 0, 0, -1, 0, 1, 1, 1, 0, 1], x: [-5, 2, 1], value: -32 },
    Point { case: "T3.9", t: [1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 1, 1, 1, 0, 1], x: [2, -7, 1], value: -36 },
    Point { case: "T3.9", t: [1, 0, 0, 1, -1, 1, 1, 0, -1, 0, 1, 1, 1, 0, 1], x: [5, 3, 5], value: -139 },
    Point { case: "T3.9", t: [1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1], x: [-4, 5, 2], value: -79 },
    Point { case: "T3.9", t: [1, 0, 0, 1, -1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1], x: [-2, 1, 1], value: -4 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1], x: [-1, 1, 1], value: -7 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1], x: [2, -1, 1], value: -8 },
    Point { case: "T3.10", t: [1, 1, 0, 1, -1, 1, 0, -1, 1, 0, 1, 0, 1, 0, 1], x: [-2, 1, 1], value: -8 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1], x: [1, -1, 2], value: -4 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1], x: [-1, 1, 1], value: -1 },
    Point { case: "T3.10", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1], x: [-2, 1, 1], value: -8 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1], x: [8, -3, 1], value: -376 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1], x: [1, -1, 1], value: -1 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 1, 1, 0, -1, -1, 0, 1, 0, 1, 0, 1], x: [2, -1, 1], value: -8 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, 1, -1, 0, 1, 0, 1, 0, 1], x: [1, 2, -2], value: -7 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, -1, -1, 0, 1, 0, 1, 0, 1], x: [2, 3, 3], value: -104 },
    Point { case: "T3.10", t: [1, 1, 0, 1, -1, 1, 0, 0, -1, 0, 1, 0, 1, 0, 1], x: [-4, 2, 1], value: -23 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 1, 1, 0, 0, -1, 0, 1, 0, 1, 0, 1], x: [4, -2, 1], value: -23 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, 1], x: [1, 2, 2], value: -7 },
    Point { case: "T3.10", t: [1, 1, 0, 1, 0, 0, 0, 0, -1, 0, 1, 0, 1, 0, 1], x: [3, 2, 5], value: -46 },
    Point { case: "T3.12", t: [1, 0, -1, 1, -1, 1, 0, -1, 1, 1, 1, 1, 1, -1, 1], x: [3, 1, 1], value: -7 },
    Point { case: "T3.12", t: [1, 0, -1, 1, -1, 1, 0, 0, 1, 1, 1, 1, 1, -1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.12", t: [1, 0, -1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, -1, 1], x: [-1, 1, 4], value: -24 },
    Point { case: "T3.12", t: [1, 0, -1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, -1, 1], x: [3, -1, 1], value: -7 },
    Point { case: "T3.12", t: [1, 0, -1, 1, 0, 1, 0, -1, 0, 1, 1, 1, 1, -1, 1], x: [2, -5, 2], value: -87 },
    Point { case: "T3.12", t: [1, 0, -1, 1, 0, 1, 0, 1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.12", t: [1, 0, -1, 1, 1, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [3, -1, 1], value: -7 },
    Point { case: "T3.12", t: [1, 0, -1, 1, -1, 1, 0, 1, -1, 1, 1, 1, 1, -1, 1], x: [5, 1, 3], value: -55 },
    Point { case: "T3.12", t: [1, 1, 1, 1, 0, 1, 0, -1, 1, -1, 1, 1, 1, -1, 1], x: [-3, 1, 1], value: -7 },
    Point { case: "T3.12", t: [1, 1, 1, 1, 1, 1, 0, 0, 1, -1, 1, 1, 1, -1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.12", t: [1, 1, 1, 1, 0, 1, 0, 1, 0, -1, 1, 1, 1, -1, 1], x: [-3, 1, 1], value: -43 },
    Point { case: "T3.12", t: [1, 1, -1, 1, 0, 1, 0, -1, 0, 1, 1, 1, 1, -1, 1], x: [7, -2, 1], value: -536 },
    Point { case: "T3.12", t: [1, 1, -1, 1, -1, 1, 0, 1, -1, 1, 1, 1, 1, -1, 1], x: [1, 5, -2], value: -148 },
    Point { case: "T3.12", t: [1, 1, -1, 1, 0, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [2, 2, 3], value: -15 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, -6, 3], value: -80 },
    Point { case: "T3.13", t: [1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1], x: [1, 1, -1], value: -5 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, 0, -1, 0, 1, 1, 1, 1, 1], x: [1, 5, -3], value: -119 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1], x: [-6, 3, 1], value: -176 },
    Point { case: "T3.13", t: [1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 1], x: [1, -1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, 1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 1, 0, 1, 0, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, -4, 2], value: -71 },
    Point { case: "T3.13", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 0, 1, 1, 1, 1, 1], x: [1, -1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 0, -1, 0, 1, 1, 1, 1, 1], x: [1, 2, -3], value: -32 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1], x: [1, 4, -3], value: -24 },
    Point { case: "T3.13", t: [1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1], x: [1, -2, 3], value: -24 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1], x: [-1, 1, 1], value: -11 },
    Point { case: "T3.13", t: [1, 1, 1, 1, 0, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, -3, 1], value: -3 },
    Point { case: "T3.13", t: [1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1], x: [1, 2, -1], value: -12 },
    Point { case: "T3.13", t: [1, 1, 1, 1, 1, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [3, 1, -2], value: -44 },
    Point { case: "T3.13", t: [1, 1, -1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.13", t: [1, 1, -1, 1, 0, 1, 0, -1, -1, 0, 1, 1, 1, 1, 1], x: [1, -3, 2], value: -12 },
    Point { case: "T3.13", t: [1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1], x: [1, -3, 1], value: -27 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 0, -1, 1, 1, 1, 1, 1, 1], x: [1, 1, -2], value: -20 },
    Point { case: "T3.13", t: [1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1], x: [1, 1, -2], value: -20 },
    Point { case: "T3.13", t: [1, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 0, 0, 1, -1, 1, 1, 1, 0, -1, 1, 1, 1, 1, 1], x: [1, 7, -7], value: -195 },
    Point { case: "T3.13", t: [1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.13", t: [1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1], x: [1, -4, 2], value: -39 },
    Point { case: "T3.13", t: [1, 1, 0, 1, -1, 1, 0, 1, 0, -1, 1, 1, 1, 1, 1], x: [1, 4, -4], value: -111 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, -1, 1], x: [-1, 1, 3], value: -7 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, -1, 1], x: [1, -1, 1], value: -3 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 0, 1, -1, 0, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.14", t: [1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [2, -2, 1], value: -39 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [4, -2, 3], value: -79 },
    Point { case: "T3.14", t: [1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [-3, 2, 1], value: -16 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [-3, 1, 2], value: -64 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, -1, 1], x: [1, 3, -1], value: -7 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 0, 1, 0, 0, 1, 1, 1, -1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 0, -1, 0, 0, 1, 1, 1, -1, 1], x: [1, -3, 1], value: -7 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 0, -1, 0, 0, 1, 1, 1, -1, 1], x: [1, 1, 1], value: -3 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, -1, 1], x: [-1, 1, 3], value: -11 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, -1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, 1, -1, 0, 1, 1, 1, -1, 1], x: [1, 1, 3], value: -3 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, 1, -1, 0, 1, 1, 1, -1, 1], x: [1, 2, -1], value: -16 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 0, -1, 0, 1, 1, 1, -1, 1], x: [5, -2, 1], value: -88 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [-7, 3, 1], value: -307 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, -1, 1], x: [3, 9, -4], value: -140 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 0, 1, 1, 1, -1, 1], x: [1, -3, 1], value: -19 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 1], x: [6, -3, 1], value: -392 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 1, 1, 1, -1, 1], x: [1, 1, 3], value: -3 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 1, 0, 1, 0, 1, 1, 1, -1, 1], x: [-3, 1, 2], value: -4 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, -1, 1], x: [-1, 1, 3], value: -11 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, -1, 1], x: [4, 4, -3], value: -63 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 1, 1, 0, 0, 1, 1, 1, -1, 1], x: [-1, 1, 1], value: -7 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 1, 1, -1, 0, 1, 1, 1, -1, 1], x: [3, 5, -4], value: -124 },
    Point { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 1, 1, -1, 0, 1, 1, 1, -1, 1], x: [1, 1, 3], value: -3 },
    Point { case: "T3.14", t: [1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, -1, 1], x: [1, -1, 1], value: -3 },
    Point { case: "T3.14", t: [1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, -1, 1], x: [-1, 1, 3], value: -11 },
    Point { case: "T3.14", t: [1, 0, 0, 1, 0, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1], x: [1, 1, -1], value: -3 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 1, 1, 1, 1, -1, 1], x: [1, -3, 1], value: -15 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 0, 1, 0, -1, 0, 1, 1, -1, 1, 1, 1], x: [7, 27, 10], value: -1668 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, 0, 0, 1, 1, -1, 1, 1, 1], x: [-6, 2, 1], value: -223 },
    Point { case: "T3.14", t: [1, 1, 0, 1, -1, 1, 0, -1, 1, 1, 1, -1, 1, 1, 1], x: [-6, 2, 1], value: -79 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, -1, 1, 1, 1], x: [1, -1, 1], value: -3 },
    Point { case: "T3.14", t: [1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, -1, 1, 1, 1], x: [-1, 3, 1], value: -23 },
    Point { case: "T3.15", t: [1, 0, 1, 1, -1, 1, 0, -1, 0, 1, 1, -1, 1, 1, 1], x: [-5, 1, 4], value: -472 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 0, 1, 0, -1, 1, 1, 1, -1, 1, 1, 1], x: [-3, 1, 4], value: -40 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, -1, 1, 1, 1], x: [5, 1, -2], value: -120 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 1, 1, 0, -1, 1, 1, 1, -1, 1, 1, 1], x: [1, -1, 1], value: -7 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 0, 1, 0, -1, 0, 1, 1, -1, 1, 1, 1], x: [3, 1, -6], value: -164 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 1, 1, 0, -1, 0, 1, 1, -1, 1, 1, 1], x: [3, 1, -6], value: -812 },
    Point { case: "T3.15", t: [1, 1, 1, 1, 0, 1, 0, -1, -1, 1, 1, 1, 1, -1, 1], x: [5, 1, -6], value: -92 },
    Point { case: "T3.15", t: [1, 1, 1, 1, -1, 1, 0, 0, -1, 1, 1, 1, 1, -1, 1], x: [-10, 5, 1], value: -2584 },
    Point { case: "T3.15", t: [1, 0, 1, 1, -1, 1, 1, 0, -1, 1, 1, 1, 1, -1, 1], x: [-3, 1, 1], value: -7 },
    Point { case: "T3.15", t: [1, 0, 1, 1, -1, 1, 1, 0, 0, 1, 1, -1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, -1, 1, 1, 1], x: [-1, 1, 1], value: -3 },
    Point { case: "T3.15", t: [1, 0, 1, 1, 0, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1], x: [3, -5, 3], value: -239 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, -1, 0, 1, 1, 0, 1, 1, 1], x: [5, 1, 1], value: -8 },
    Point { case: "COR4", t: [0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1], x: [2, 1, -1], value: -4 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1], x: [-4, 1, 1], value: -24 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, -1, 0, 1, 1, 0, 1, 0, 1], x: [5, 1, 1], value: -12 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, 0, -1, 1, 1, 0, 1, 0, 1], x: [5, 1, 1], value: -12 },
    Point { case: "COR4", t: [0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1], x: [2, -1, 1], value: -4 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1], x: [-4, 1, 1], value: -4 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, -1, 0, 0, 1, 0, 1, 1, 1], x: [5, 1, 1], value: -28 },
    Point { case: "COR4", t: [0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1], x: [5, 1, 1], value: -134 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, 0, 0, 0, 1, 1, 1, -1, 1], x: [-4, 1, 1], value: -8 },
    Point { case: "COR4", t: [0, 0, 0, 1, -1, 1, 1, 0, -1, 1, 1, 1, 1, -1, 1], x: [5, 1, 1], value: -12 },
    Point { case: "COR4", t: [0, 0, 0, 1, 1, 1, 1, 1, 0, -1, 1, 1, 1, -1, 1], x: [3, 1, -1], value: -4 },
    Point { case: "COR5", t: [0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1], x: [1, 2, -1], value: -1 },
];

pub const MISPRINTED: &[Misprint] = &[
    Misprint { case: "T3.8", t: [1, -1, -1, 1, 1, 1, 0, 1, 1, 0, 1, -1, 1, 0, 1], x: [4, -1, 3], printed: -66, actual: -12 },
    Misprint { case: "T3.8", t: [1, -1, -1, 1, 1, 1, 0, -1, 0, 0, 1, -1, 1, 0, 1], x: [1, 4, 2], printed: -59, actual: -47 },
    Misprint { case: "T3.9", t: [1, 1, 0, 1, -1, 1, 0, 0, -1, 0, 1, 0, 1, 1, 1], x: [1, -1, 1], printed: -11, actual: 37 },
    Misprint { case: "T3.9", t: [1, 0, 0, 1, -1, 1, 1, 1, -1, 0, 1, 1, 1, 0, 1], x: [2, 5, 4], printed: -79, actual: 6801 },
    Misprint { case: "T3.10", t: [1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1], x: [0, -1, 1], printed: -4, actual: 2 },
    Misprint { case: "T3.14", t: [1, 0, 1, 1, 0, 1, 1, 0, -1, 0, 1, 1, 1, -1, 1], x: [-4, 1, 1], printed: -8, actual: 232 },
    Misprint { case: "T3.14", t: [1, 0, 0, 1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1], x: [-2, 2, 1], printed: -64, actual: -15 },
];
