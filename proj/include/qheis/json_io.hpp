#pragma once

#include "json.hpp"

#include "qheis/eliminant.hpp"
#include "qheis/laurent.hpp"
#include "qheis/spectral.hpp"

namespace qheis {

using Json = nlohmann::ordered_json;

// Rationals travel as "n" / "n/d" strings; symbolic scalars as
// {"exponent": "coefficient"} maps.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, QMode mode);

Json qparam_to_json(const QParam& q);
QParam qparam_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j, QMode mode);

Json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const Json& j);

Json bipoly_to_json(const BiPoly& b);
BiPoly bipoly_from_json(const Json& j, QMode mode);

Json tripoly_to_json(const TriPoly& p);
TriPoly tripoly_from_json(const Json& j, QMode mode);

Json curveset_to_json(const CurveSet& cs);
Json report_to_json(const VerificationReport& rep);

Json window_to_json(const LaurentWindow& w);
Json kernel_report_to_json(const KernelReport& rep);

} // namespace qheis
