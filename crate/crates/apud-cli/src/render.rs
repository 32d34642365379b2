//! Deterministic SVG rendering of placements: the configured lines, one
//! unit circle per placed disk, role-based coloring when roles are known.

use apud_geometry::rational::{rat, rat_decimal, rat_int, Rat};
use apud_geometry::{LineConfig, Placement};
use apud_reduce::{PathPos, Role};
use num_traits::Zero;
use std::fmt::Write;

fn role_class(role: &Role) -> &'static str {
    match role {
        Role::PAlpha { .. } => "alpha",
        Role::PL { pos } | Role::PR { pos } | Role::LiteralPath { pos, .. } => {
            if matches!(pos, PathPos::Cross) {
                "cross"
            } else {
                "skel"
            }
        }
        Role::StarRay { .. } => "skel",
        Role::DiamondTip { .. } | Role::EndCycle { .. } => "gadget",
        Role::Flag { .. } => "flag",
    }
}

/// Renders lines and disks into an SVG document. Output bytes are a pure
/// function of the inputs.
pub fn render_svg(placement: &Placement, lines: &LineConfig, roles: Option<&[Role]>) -> String {
    // Bounds over line coordinates and disk centers, padded for radius 1.
    let mut xs: Vec<Rat> = lines.verticals().to_vec();
    let mut ys: Vec<Rat> = lines.horizontals().to_vec();
    for p in placement.points.values() {
        xs.push(p.x.clone());
        ys.push(p.y.clone());
    }
    if xs.is_empty() {
        xs.push(Rat::zero());
    }
    if ys.is_empty() {
        ys.push(Rat::zero());
    }
    let pad = rat(2, 1);
    let min_x = xs.iter().min().unwrap() - &pad;
    let max_x = xs.iter().max().unwrap() + &pad;
    let min_y = ys.iter().min().unwrap() - &pad;
    let max_y = ys.iter().max().unwrap() + &pad;
    let width = &max_x - &min_x;
    let height = &max_y - &min_y;
    // SVG y grows downward; flip about the midline.
    let flip = &min_y + &max_y;
    let fy = |y: &Rat| rat_decimal(&(&flip - y));
    let scale = rat_int(32);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        rat_decimal(&min_x),
        rat_decimal(&min_y),
        rat_decimal(&width),
        rat_decimal(&height),
        rat_decimal(&(&width * &scale)),
        rat_decimal(&(&height * &scale)),
    );
    svg.push_str(
        "<style>line{stroke:#999;stroke-width:0.04}circle{fill-opacity:0.25;stroke-width:0.05}\
         .plain{fill:#444;stroke:#222}.skel{fill:#3366cc;stroke:#1a3d99}\
         .cross{fill:#33aa55;stroke:#1d7038}.alpha{fill:#ddbb22;stroke:#a08410}\
         .gadget{fill:#cc4444;stroke:#8a2222}.flag{fill:#ee8822;stroke:#b05c0a}\
         .dot{fill:#000;fill-opacity:1;stroke:none}</style>\n",
    );
    for y in lines.horizontals() {
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            rat_decimal(&min_x),
            fy(y),
            rat_decimal(&max_x),
            fy(y),
        );
    }
    for x in lines.verticals() {
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            rat_decimal(x),
            fy(&min_y),
            rat_decimal(x),
            fy(&max_y),
        );
    }
    for (v, p) in &placement.points {
        let class = roles
            .and_then(|rs| rs.get(*v))
            .map(role_class)
            .unwrap_or("plain");
        let _ = writeln!(
            svg,
            r#"<circle class="{}" cx="{}" cy="{}" r="1"/><circle class="dot" cx="{}" cy="{}" r="0.07"/>"#,
            class,
            rat_decimal(&p.x),
            fy(&p.y),
            rat_decimal(&p.x),
            fy(&p.y),
        );
    }
    svg.push_str("</svg>\n");
    svg
}
