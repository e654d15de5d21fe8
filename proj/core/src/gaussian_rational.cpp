#include "ghzcert/gaussian_rational.h"

#include <stdexcept>

namespace ghzcert {

GaussianRational GaussianRational::unit(int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("GaussianRational: division by zero");
    }
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) {
        return re_.get_str();
    }
    std::string out;
    if (sgn(re_) != 0) {
        out = re_.get_str();
        if (sgn(im_) > 0) {
            out += '+';
        }
    }
    if (im_ == 1) {
        out += "i";
    } else if (im_ == -1) {
        out += "-i";
    } else {
        out += im_.get_str() + "i";
    }
    return out;
}

}  // namespace ghzcert
