#pragma once

#include <string>

#include "vaw/errors.hpp"

namespace vaw {

/// Entry of a Coxeter matrix: an integer >= 2 (1 on the diagonal) or infinity.
class Label {
public:
    static Label finite(unsigned m) { return Label(m); }
    static Label infinity() { return Label(0); }

    bool is_infinite() const { return v_ == 0; }
    bool is_finite() const { return v_ != 0; }

    unsigned value() const {
        if (is_infinite()) throw PreconditionError("label is infinite");
        return v_;
    }

    bool operator==(const Label& o) const { return v_ == o.v_; }
    bool operator!=(const Label& o) const { return v_ != o.v_; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

private:
    explicit Label(unsigned v) : v_(v) {}
    unsigned v_;  // 0 encodes infinity
};

/// Entry of the derived Coxeter matrix on root pairs: 1 on the diagonal, a
/// finite label >= 2, infinity, or "undetermined at search depth d" (possible
/// only over an infinite Coxeter group).
class MHatEntry {
public:
    static MHatEntry finite(unsigned m) { return MHatEntry(Tag::finite, m); }
    static MHatEntry infinity() { return MHatEntry(Tag::infinity, 0); }
    static MHatEntry undetermined(unsigned depth) { return MHatEntry(Tag::undetermined, depth); }

    bool is_finite() const { return tag_ == Tag::finite; }
    bool is_infinite() const { return tag_ == Tag::infinity; }
    bool is_undetermined() const { return tag_ == Tag::undetermined; }

    unsigned value() const {
        if (!is_finite()) throw PreconditionError("derived label is not finite");
        return v_;
    }
    unsigned depth() const {
        if (!is_undetermined()) throw PreconditionError("derived label is determined");
        return v_;
    }

    bool operator==(const MHatEntry& o) const { return tag_ == o.tag_ && v_ == o.v_; }
    bool operator!=(const MHatEntry& o) const { return !(*this == o); }

    std::string str() const {
        switch (tag_) {
            case Tag::finite: return std::to_string(v_);
            case Tag::infinity: return "inf";
            default: return "undetermined(" + std::to_string(v_) + ")";
        }
    }

private:
    enum class Tag { finite, infinity, undetermined };
    MHatEntry(Tag t, unsigned v) : tag_(t), v_(v) {}
    Tag tag_;
    unsigned v_;
};

}  // namespace vaw
