#pragma once

#include <cstdint>
#include <vector>

namespace qact::sim {

// Supported primitive kinds. Controlled variants (CX, CRY, CCRY, MCX, MCRY)
// are a base kind plus a control list; anti-controls trigger on |0> and are
// equivalent to X-conjugated positive controls.
enum class GateKind {
    kX,
    kH,
    kRY,   // RY(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
    kCZ,   // symmetric two-qubit phase, targets hold both qubits
    kRBS,  // diag{1, [[cos t, -sin t], [sin t, cos t]], 1} on |q1 q2> in {00,01,10,11}
};

struct Gate {
    GateKind kind = GateKind::kX;
    std::vector<int> targets;        // 1 qubit; 2 for CZ and RBS (RBS order matters)
    std::vector<int> controls;       // fire on |1>
    std::vector<int> anti_controls;  // fire on |0>
    double theta = 0.0;
    int param_slot = -1;    // >= 0: effective angle = param_scale * params[slot]
    double param_scale = 1.0;

    bool is_parameterized() const { return param_slot >= 0; }
    int touched_qubits() const {
        return static_cast<int>(targets.size() + controls.size() + anti_controls.size());
    }
};

namespace gate {

inline Gate x(int target) { return {GateKind::kX, {target}, {}, {}, 0.0, -1, 1.0}; }
inline Gate h(int target) { return {GateKind::kH, {target}, {}, {}, 0.0, -1, 1.0}; }
inline Gate cx(int control, int target) {
    return {GateKind::kX, {target}, {control}, {}, 0.0, -1, 1.0};
}
inline Gate mcx(std::vector<int> controls, int target) {
    return {GateKind::kX, {target}, std::move(controls), {}, 0.0, -1, 1.0};
}
inline Gate cz(int a, int b) { return {GateKind::kCZ, {a, b}, {}, {}, 0.0, -1, 1.0}; }
inline Gate ry(int target, double theta) {
    return {GateKind::kRY, {target}, {}, {}, theta, -1, 1.0};
}
inline Gate cry(int control, int target, double theta) {
    return {GateKind::kRY, {target}, {control}, {}, theta, -1, 1.0};
}
inline Gate ccry(int c1, int c2, int target, double theta) {
    return {GateKind::kRY, {target}, {c1, c2}, {}, theta, -1, 1.0};
}
inline Gate mcry(std::vector<int> controls, std::vector<int> anti_controls, int target,
                 double theta) {
    return {GateKind::kRY, {target}, std::move(controls), std::move(anti_controls), theta, -1, 1.0};
}
inline Gate rbs(int q1, int q2, double theta) {
    return {GateKind::kRBS, {q1, q2}, {}, {}, theta, -1, 1.0};
}
inline Gate ry_param(int target, int slot, double scale = 1.0) {
    return {GateKind::kRY, {target}, {}, {}, 0.0, slot, scale};
}
inline Gate rbs_param(int q1, int q2, int slot, double scale = 1.0) {
    return {GateKind::kRBS, {q1, q2}, {}, {}, 0.0, slot, scale};
}

}  // namespace gate
}  // namespace qact::sim
