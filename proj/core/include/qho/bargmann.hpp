#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qho/exact.hpp"
#include "qho/ladder.hpp"
#include "qho/params.hpp"
#include "qho/report.hpp"

namespace qho {

/// Sign of the cross term exp(+-sqrt(2) a xi) in the Segal-Bargmann kernel.
/// plus maps phi_l to a^l / sqrt(l!); minus gives (-1)^l a^l / sqrt(l!).
enum class KernelSign { plus, minus };

/// table: bare integral of the conjugate transform, sqrt(l!) / b^{l+1}.
/// paper: the same times pi^{-1/4}.
enum class PrefactorMode { paper, table };

std::string_view to_string(KernelSign sign);
std::string_view to_string(PrefactorMode mode);
std::optional<KernelSign> parse_kernel_sign(std::string_view text);
std::optional<PrefactorMode> parse_prefactor_mode(std::string_view text);

inline constexpr int kMaxTransformLevel = 20;

/// pi^{-1/4} int phi_l(xi) exp((-xi^2 - a^2) / 2) exp(+-sqrt(2) a xi) dxi with
/// unit-norm phi_l in the dimensionless xi, by Gauss-Hermite quadrature.
/// The value at `quadrature_order` is compared with order + 10; a difference
/// above 1e-10 (relative to max(1, |value|)) throws
/// Error(quadrature_order_too_low), as does order < l + 30.
double sb_transform(int l, double a, KernelSign sign = KernelSign::plus,
                    int quadrature_order = 64);

/// a^l / sqrt(l!), times (-1)^l for the minus kernel.
double sb_closed_form(int l, double a, KernelSign sign = KernelSign::plus);

/// int_0^inf (a^l / sqrt(l!)) exp(-a b) da by Gauss-Laguerre quadrature after
/// a = v / b. Order 0 selects the minimum, l + 20.
/// Throws Error(domain_error) for b <= 0 (the integral diverges).
double conjugate_transform(int l, double b, PrefactorMode mode = PrefactorMode::table,
                           int quadrature_order = 0);

/// sqrt(l!) / b^{l+1}
double conjugate_closed_form(int l, double b);

enum class Table1Space { bargmann, conjugate, conformal };

std::string_view to_string(Table1Space space);

/// Operators and eigenfunctions of one complex representation.
struct Table1Row {
  Table1Space space;
  std::string variable;
  std::string lower_op;
  std::string raise_op;
  std::string eigenfunction;
};

Table1Row table1_row(Table1Space space);

/// Exact eigenfunction of level l in the given space. In the conformal space
/// the common factor (m omega / pi hbar)^{1/4} of every k_l is left out; it
/// is the same for all l and cancels from every identity checked here.
exact::SymbolicFunction table1_eigenfunction(Table1Space space, int l);

/// Exact action of the space's lowering or raising operator.
///   bargmann:  d/da,  a
///   conjugate: b,     -d/db
///   conformal: 2^{-1/2} d/dzeta,  -2^{-1/2} d/dzeta*
/// In the conformal space d/dzeta* is evaluated on the real-coordinate form
/// P(xi) exp(-xi^2/2) as d/dxi - xi and the Gaussian is dropped afterwards.
exact::SymbolicFunction table1_apply(Table1Space space, LadderDirection direction,
                                     const exact::SymbolicFunction& f);

/// Lowering gives sqrt(l) eigenfunction(l - 1), raising sqrt(l + 1)
/// eigenfunction(l + 1), exactly; lowering l = 0 must give zero.
CheckReport table1_ladder_check(Table1Space space, int l, LadderDirection direction);

/// (sum_i a_i^dagger a_i + 3/2) acting on the product eigenfunction has the
/// exact eigenvalue n + 3/2.
CheckReport table1_schrodinger_check(Table1Space space, const StateLabel& state);

/// (lower raise - raise lower) f_l = f_l exactly.
CheckReport table1_commutator_check(Table1Space space, int l);

}  // namespace qho
