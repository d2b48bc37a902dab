#pragma once

#include <string>

#include "ilw/errors.hpp"

namespace ilw {

/// Depth parameter of the equation/measure family.
///
/// Finite(delta) is the generic case, Infinite selects the deep-water
/// (Benjamin-Ono) limit and Shallow the delta = 0 limit point, which is
/// meaningful only for the scaled symbol L and the scaled/KdV families.
class DepthParam {
  public:
    enum class Kind { Finite, Infinite, Shallow };

    static DepthParam finite(double delta) {
        if (!(delta > 0.0))
            throw family_error("DepthParam::finite requires delta > 0");
        return DepthParam(Kind::Finite, delta);
    }
    static DepthParam infinite() { return DepthParam(Kind::Infinite, 0.0); }
    static DepthParam shallow() { return DepthParam(Kind::Shallow, 0.0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_shallow() const { return kind_ == Kind::Shallow; }

    /// The finite depth value; only valid for Finite.
    double delta() const {
        if (kind_ != Kind::Finite)
            throw family_error("DepthParam::delta on a non-finite depth");
        return delta_;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Infinite: return "inf";
            case Kind::Shallow: return "0";
            default: return std::to_string(delta_);
        }
    }

    friend bool operator==(const DepthParam& a, const DepthParam& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.delta_ == b.delta_);
    }

  private:
    DepthParam(Kind k, double d) : kind_(k), delta_(d) {}
    Kind kind_;
    double delta_;
};

} // namespace ilw
