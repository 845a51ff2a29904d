//! Built-in example digraphs.
//!
//! `grid`/`grid_chords` are the 2x3 grid and its two-chord variant;
//! `star6`/`star6_chords`/`trapezohedron` are the five-arm fan, its chorded
//! variant, and the fan closed into a trapezohedron; `cube` is the directed
//! 3-cube; `g_prime` and `g_main` are the eleven-vertex digraphs whose
//! level-four behavior separates characteristic two from the rest.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const FIXTURE_NAMES: [&str; 8] = [
    "grid",
    "grid_chords",
    "star6",
    "star6_chords",
    "cube",
    "trapezohedron",
    "g_prime",
    "g_main",
];

/// Returns the named built-in digraph.
pub fn builtin_fixture(name: &str) -> Result<Digraph> {
    let arrows: Vec<(String, String)> = match name {
        "grid" => grid_arrows(),
        "grid_chords" => {
            let mut a = grid_arrows();
            a.push(owned("0", "2"));
            a.push(owned("3", "5"));
            a
        }
        "star6" => fan_arrows(),
        "star6_chords" => {
            let mut a = fan_arrows();
            a.push(owned("s", "b1"));
            a.push(owned("a5", "t"));
            a
        }
        "cube" => cube_arrows(),
        "trapezohedron" => {
            let mut a = fan_arrows();
            a.push(owned("a5", "b1"));
            a
        }
        "g_prime" => g_prime_arrows(),
        "g_main" => {
            let mut a = g_prime_arrows();
            a.extend(g_main_chords());
            a
        }
        _ => return Err(Error::UnknownFixture(name.to_owned())),
    };
    Digraph::from_named_arrows(arrows.iter().map(|(u, v)| (u.as_str(), v.as_str())))
}

/// The six chord arrows distinguishing `g_main` from `g_prime`, as name
/// pairs: `x1^i -> x3^i` and `x1^i -> x3^{i+2}`.
pub fn g_main_chords() -> Vec<(String, String)> {
    (0..3)
        .flat_map(|i| {
            [
                (format!("x1^{i}"), format!("x3^{i}")),
                (format!("x1^{i}"), format!("x3^{}", (i + 2) % 3)),
            ]
        })
        .collect()
}

fn owned(u: &str, v: &str) -> (String, String) {
    (u.to_owned(), v.to_owned())
}

// Two rows of three, all arrows rightwards and downwards:
//   0 -> 1 -> 2
//   |    |    |
//   3 -> 4 -> 5
fn grid_arrows() -> Vec<(String, String)> {
    [
        ("0", "1"),
        ("1", "2"),
        ("0", "3"),
        ("1", "4"),
        ("2", "5"),
        ("3", "4"),
        ("4", "5"),
    ]
    .map(|(u, v)| owned(u, v))
    .to_vec()
}

// Hub `s` fans out to five arms a1..a5; arm ai covers bi and b(i+1) except
// the last; all bj feed the sink `t`.
fn fan_arrows() -> Vec<(String, String)> {
    let mut arrows = Vec::new();
    for i in 1..=5 {
        arrows.push(owned("s", &format!("a{i}")));
    }
    for i in 1..=5 {
        arrows.push(owned(&format!("a{i}"), &format!("b{i}")));
        if i < 5 {
            arrows.push(owned(&format!("a{i}"), &format!("b{}", i + 1)));
        }
    }
    for j in 1..=5 {
        arrows.push(owned(&format!("b{j}"), "t"));
    }
    arrows
}

// Directed 3-cube: source 0, sink 7, mid-layers {1,2,3} and {4,5,6}.
fn cube_arrows() -> Vec<(String, String)> {
    [
        ("0", "1"),
        ("0", "2"),
        ("0", "3"),
        ("1", "4"),
        ("1", "5"),
        ("2", "4"),
        ("2", "6"),
        ("3", "5"),
        ("3", "6"),
        ("4", "7"),
        ("5", "7"),
        ("6", "7"),
    ]
    .map(|(u, v)| owned(u, v))
    .to_vec()
}

// Vertices x0, x4 and xj^i for i mod 3 and 1 <= j <= 3; arrows
// x0 -> x1^i, xj^i -> x(j+1)^i, xj^i -> x(j+1)^(i+1) for j = 1,2, and
// x3^i -> x4.
fn g_prime_arrows() -> Vec<(String, String)> {
    let mut arrows = Vec::new();
    for i in 0..3 {
        arrows.push(owned("x0", &format!("x1^{i}")));
    }
    for j in 1..=2 {
        for i in 0..3usize {
            arrows.push(owned(&format!("x{j}^{i}"), &format!("x{}^{i}", j + 1)));
            arrows.push(owned(
                &format!("x{j}^{i}"),
                &format!("x{}^{}", j + 1, (i + 1) % 3),
            ));
        }
    }
    for i in 0..3 {
        arrows.push(owned(&format!("x3^{i}"), "x4"));
    }
    arrows
}
