/// Built-in spaces: `(name, variables, Δ₀, description)`.
pub(crate) const CATALOG: &[(&str, &[&str], &str, &str)] = &[
    ("rank1", &["x"], "x", "C acted on by C*"),
    ("quad2", &["x1", "x2"], "x1^2 + x2^2", "quadratic form on C^2"),
    ("quad3", &["x1", "x2", "x3"], "x1^2 + x2^2 + x3^2", "quadratic form on C^3"),
    ("quad4", &["x1", "x2", "x3", "x4"], "x1^2 + x2^2 + x3^2 + x4^2", "quadratic form on C^4"),
    ("det2", &["x11", "x12", "x21", "x22"], "x11*x22 - x12*x21", "determinant on 2x2 matrices"),
    (
        "det3",
        &["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"],
        "x11*x22*x33 + x12*x23*x31 + x13*x21*x32 - x13*x22*x31 - x12*x21*x33 - x11*x23*x32",
        "determinant on 3x3 matrices",
    ),
    // S = [[s0 + s1, s2], [s2, s0 - s1]]; these coordinates are orthogonal for
    // tr(ST), which makes Δ₀(∂) built from the same coefficients invariant.
    (
        "sym2",
        &["s0", "s1", "s2"],
        "s0^2 - s1^2 - s2^2",
        "determinant on symmetric 2x2 matrices [[s0+s1, s2], [s2, s0-s1]]",
    ),
    (
        "pfaff4",
        &["x12", "x13", "x14", "x23", "x24", "x34"],
        "x12*x34 - x13*x24 + x14*x23",
        "Pfaffian on alternating 4x4 matrices",
    ),
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, ..)| *n).collect()
}

/// `name: description` lines for listings.
pub fn catalog_listing() -> Vec<String> {
    CATALOG.iter().map(|(name, _, _, desc)| format!("{name}: {desc}")).collect()
}
