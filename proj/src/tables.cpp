#include "cornell/tables.hpp"

#include <fmt/format.h>

#include "cornell/error.hpp"

namespace cornell::analysis {

namespace {

constexpr double kTableMass = 0.5;

TableSpec table_one() {
    return {1, 3, kTableMass, "Ground-state r_dE values for V(r) = -1/r + b r in N = 3", false,
            {
                {1.0, 0.01, 0, 4.103, 1.7436481087936350, 0.029},
                {1.0, 0.01, 1, 6.873, 4.9460678940048420, 0.080},
                {1.0, 0.01, 2, 9.195, 7.9252834202633755, 0.130},
                {1.0, 0.01, 3, 11.265, 10.555231364572375, 0.175},
                {1.0, 0.01, 4, 13.163, 12.921702562396474, 0.216},
                {1.0, 0.01, 5, 14.935, 15.094068452133266, 0.254},
                {1.0, 1.0, 0, 0.884, 0.7994448794104599, 1.648},
                {1.0, 1.0, 1, 1.481, 1.5319979780777233, 2.888},
                {1.0, 1.0, 2, 1.981, 2.1271924940550924, 3.878},
                {1.0, 1.0, 3, 2.427, 2.6476825358214430, 4.742},
                {1.0, 1.0, 4, 2.836, 3.120002415656866, 5.527},
                {1.0, 1.0, 5, 3.218, 3.5579114353323114, 6.255},
                {1.0, 100.0, 0, 0.190, 0.20718831032409812, 46.652},
                {1.0, 100.0, 1, 0.319, 0.3568814759026067, 70.079},
                {1.0, 100.0, 2, 0.427, 0.48025853095063736, 89.743},
                {1.0, 100.0, 3, 0.523, 0.5892382922692437, 107.350},
                {1.0, 100.0, 4, 0.611, 0.6887636263960271, 123.572},
                {1.0, 100.0, 5, 0.693, 0.7814337345649496, 138.768},
            }};
}

TableSpec table_two() {
    return {2, 4, kTableMass, "Ground-state r_dE values for V(r) = -1/r + b r in N = 4", true,
            {
                {1.0, 0.01, 0, 5.566, 3.3312700304565390, 0.534,
                 "printed dE 0.534 breaks the ordering of the neighbouring rows (0.106 0.153 ...); "
                 "likely 0.053"},
                {1.0, 0.01, 1, 8.074, 6.4834209674432110, 0.106},
                {1.0, 0.01, 2, 10.255, 9.278604516903260, 0.153},
                {1.0, 0.01, 3, 12.232, 11.766427983937469, 0.196},
                {1.0, 0.01, 4, 14.063, 14.028816948623492, 0.235},
                {1.0, 0.01, 5, 15.783, 14.585313802191063, 0.293},
                {1.0, 1.0, 0, 1.199, 1.1896870585180375, 2.314},
                {1.0, 1.0, 1, 1.739, 1.8415039963613402, 3.404},
                {1.0, 1.0, 2, 2.209, 2.394675709114608, 4.322},
                {1.0, 1.0, 3, 2.635, 2.888823024670750, 5.143},
                {1.0, 1.0, 4, 3.030, 2.4699633437009440, 7.094},
                {1.0, 1.0, 5, 3.400, 2.3228580785446677, 8.805},
            }};
}

TableSpec table_three() {
    constexpr double r0 = 0.884;
    return {3, 3, kTableMass, "Lowest-level r_dE values for V(r) = -a/r + r in N = 3", false,
            {
                {0.0, 1.0, 0, r0, 1.0092498710582083, 2.338},
                {0.1, 1.0, 0, r0, 0.9871174720215355, 2.254,
                 "printed dE equals E_exact = E_ES + dE (2.2537); the profile at the printed r_dE "
                 "gives dE = 2.2562"},
                {0.2, 1.0, 0, r0, 0.9650736643159619, 2.177},
                {0.3, 1.0, 0, r0, 0.9432041027784062, 2.101},
                {0.4, 1.0, 0, r0, 0.9215784931711197, 2.028},
                {0.5, 1.0, 0, r0, 0.9002533954125955, 1.958},
                {0.6, 1.0, 0, r0, 0.8792744720957341, 1.891},
                {0.7, 1.0, 0, r0, 0.8586783015732216, 1.826},
                {0.8, 1.0, 0, r0, 0.8384938486996074, 1.764},
                {0.9, 1.0, 0, r0, 0.8187436656830261, 1.705},
                {1.0, 1.0, 0, r0, 0.7994448794104599, 1.648},
                {1.1, 1.0, 0, r0, 0.7806100091335577, 1.593},
                {1.2, 1.0, 0, r0, 0.7622476487440810, 1.541},
                {1.3, 1.0, 0, r0, 0.7443630403947710, 1.491},
                {1.4, 1.0, 0, r0, 0.7269585604248531, 1.443},
                {1.5, 1.0, 0, r0, 0.7100341340504672, 1.397},
                {1.6, 1.0, 0, r0, 0.6935875917754227, 1.353},
                {1.7, 1.0, 0, r0, 0.6776149777440374, 1.311},
                {1.8, 1.0, 0, r0, 0.6621108181210410, 1.270},
                {1.9, 1.0, 0, r0, 0.6470684263448296, 1.232},
            }};
}

}  // namespace

TableSpec table_spec(int id) {
    switch (id) {
        case 1: return table_one();
        case 2: return table_two();
        case 3: return table_three();
        default: throw DomainError(fmt::format("unknown table id {} (expected 1, 2 or 3)", id));
    }
}

std::vector<int> table_ids() { return {1, 2, 3}; }

}  // namespace cornell::analysis
