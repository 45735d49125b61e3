#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evolalg/matrix.hpp"

namespace evolalg {

/// Coordinates of an algebra element in the natural basis.
struct Element {
    std::vector<Scalar> coords;

    bool operator==(const Element&) const = default;
};

Element element_add(const Element& a, const Element& b);
Element element_scale(const Scalar& c, const Element& a);

/// Evolution algebra given by its structure matrix: column i holds the
/// coordinates of b_i^2, i.e. entry (k, i) is the structure constant w_ki.
class EvolutionAlgebra {
public:
    /// Default labels are b0..b{n-1} when none are given.
    explicit EvolutionAlgebra(Matrix structure, std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    const Field& field() const { return structure_.field(); }
    const Matrix& structure() const { return structure_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_regular() const { return regular_; }
    int square_rank() const { return structure_.rank(); }

    Element zero_element() const;
    Element basis_element(int i) const;

    /// Bilinear product; distinct basis elements multiply to zero, so
    /// (xy)_k = sum_i x_i * y_i * w_ki.
    Element multiply(const Element& x, const Element& y) const;

    bool operator==(const EvolutionAlgebra& rhs) const;

    /// "evolalg v1" text format.
    void write(std::ostream& out) const;
    static EvolutionAlgebra read(std::istream& in);

private:
    Matrix structure_;
    int dim_;
    std::vector<std::string> labels_;
    bool regular_;
};

} // namespace evolalg
