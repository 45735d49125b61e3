#include "evolalg/evolution.hpp"

#include <ostream>
#include <unordered_set>

#include "evolalg/io.hpp"

namespace evolalg {

Element element_add(const Element& a, const Element& b) {
    if (a.coords.size() != b.coords.size())
        throw ValidationError("DimensionMismatch: element sizes differ");
    Element r;
    r.coords.reserve(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        r.coords.push_back(a.coords[i] + b.coords[i]);
    return r;
}

Element element_scale(const Scalar& c, const Element& a) {
    Element r;
    r.coords.reserve(a.coords.size());
    for (const Scalar& x : a.coords) r.coords.push_back(c * x);
    return r;
}

EvolutionAlgebra::EvolutionAlgebra(Matrix structure, std::vector<std::string> labels)
    : structure_(std::move(structure)), dim_(structure_.rows()), labels_(std::move(labels)) {
    if (structure_.rows() != structure_.cols())
        throw ValidationError("NotSquare: structure matrix must be square");
    if (labels_.empty()) {
        labels_.reserve(dim_);
        for (int i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != dim_)
        throw ValidationError("LabelCountMismatch: expected " + std::to_string(dim_) +
                              " labels, got " + std::to_string(labels_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw ValidationError("DuplicateLabel: '" + l + "'");
    regular_ = !structure_.determinant().is_zero();
}

Element EvolutionAlgebra::zero_element() const {
    return Element{std::vector<Scalar>(dim_, Scalar::zero(field()))};
}

Element EvolutionAlgebra::basis_element(int i) const {
    Element e = zero_element();
    e.coords.at(i) = Scalar::one(field());
    return e;
}

Element EvolutionAlgebra::multiply(const Element& x, const Element& y) const {
    if (static_cast<int>(x.coords.size()) != dim_ || static_cast<int>(y.coords.size()) != dim_)
        throw ValidationError("DimensionMismatch: element does not belong to this algebra");
    Element r = zero_element();
    for (int i = 0; i < dim_; ++i) {
        if (x.coords[i].is_zero() || y.coords[i].is_zero()) continue;
        const Scalar xy = x.coords[i] * y.coords[i];
        for (int k = 0; k < dim_; ++k) {
            if (structure_.at(k, i).is_zero()) continue;
            r.coords[k] = r.coords[k] + xy * structure_.at(k, i);
        }
    }
    return r;
}

bool EvolutionAlgebra::operator==(const EvolutionAlgebra& rhs) const {
    return structure_ == rhs.structure_ && labels_ == rhs.labels_;
}

void EvolutionAlgebra::write(std::ostream& out) const {
    out << "evolalg v1\n" << field().str() << "\n" << dim_ << "\n";
    for (int i = 0; i < dim_; ++i) {
        if (i) out << ' ';
        out << labels_[i];
    }
    out << "\n";
    for (int k = 0; k < dim_; ++k) {
        for (int i = 0; i < dim_; ++i) {
            if (i) out << ' ';
            out << structure_.at(k, i).str();
        }
        out << "\n";
    }
}

EvolutionAlgebra EvolutionAlgebra::read(std::istream& in) {
    TokenReader r(in);
    r.expect("evolalg");
    r.expect("v1");
    const Field f = Field::parse(r.next("field descriptor"));
    const int n = static_cast<int>(r.next_int("dimension", 0, 4096));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(r.next("basis label"));
    Matrix m(f, n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            m.set(k, i, Scalar::parse(f, r.next("matrix entry")));
    r.expect_end();
    return EvolutionAlgebra(std::move(m), std::move(labels));
}

} // namespace evolalg
