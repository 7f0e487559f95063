#pragma once

#include "lefschetz/flows/system.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefschetz::flows::catalog {

/// Gradient flow of the height on a hexagonal circle: source at vertex 0 with
/// multiplier e^{rate t}, sink at vertex 3. sigma is the identity or i -> -i.
FlowSystem s1_gradient(const Rational& rate = 1, bool reflect = false);

/// Rigid rotation at `speed` turns per unit time; sigma rotates by `sigma_steps` vertices.
FlowSystem s1_rotation(const Rational& speed = 1, int sigma_steps = 0, int vertices = 6);

enum class SphereSymmetry { rotation, reflection };

/// Rotation of the sphere about the polar axis at `speed` turns per unit time,
/// on a ring triangulation with `ring` vertices per latitude. sigma is a
/// rotation by `turn` of a full turn (ring * turn must be an integer) or z -> -z.
FlowSystem s2_rotation(const Rational& speed = 1, SphereSymmetry symmetry = SphereSymmetry::rotation,
                       const Rational& turn = Rational(1, 2), int ring = 6);

/// Linear flow (x, y) -> (x + a t, y + b t) on the grid torus; sigma shifts the grid by (shift_i, shift_j).
FlowSystem t2_translation(const Rational& a = 1, const Rational& b = 0, int shift_i = 0, int shift_j = 0,
                          int grid = 4);

/// Product of two circle gradients with rates (rate_x, rate_y): one source,
/// two saddles, one sink. sigma is the identity or (x, y) -> (-x, -y).
FlowSystem t2_gradient(const Rational& rate_x = 1, const Rational& rate_y = 1, bool negate = false, int grid = 4);

/// Known flow ids, sorted.
std::vector<std::string> flow_ids();

/// Parameters as text: "speed", "rate", "rate_y", "vertices", "ring", "grid",
/// "velocity" ("a b"), and "sigma" ("id", "reflection", "negate",
/// "rotation <turn>", "steps <k>", "shift <i> <j>").
using Params = std::map<std::string, std::string>;
FlowSystem make_flow(const std::string& id, const Params& params = {});

}  // namespace lefschetz::flows::catalog
