#include "equality_form.hpp"

#include "errors.hpp"

namespace armred {

std::string eq_tag_str(EqTag tag) {
  switch (tag) {
    case EqTag::atom: return "atom";
    case EqTag::slack: return "slack";
    case EqTag::selector: return "selector";
    case EqTag::guard: return "guard";
  }
  return "?";
}

namespace {

class Converter {
public:
  EqualitySystem run(const Formula& f) {
    for (const std::string& var : formula_vars(f)) sys_.variables.push_back(var);
    convert(f, Poly());
    return std::move(sys_);
  }

private:
  std::string fresh(const char* prefix, uint32_t& counter) {
    std::string name = std::string("$") + prefix + "_" + std::to_string(counter++);
    sys_.variables.push_back(name);
    return name;
  }

  // guard is the product of enclosing selectors; a zero polynomial means "no
  // enclosing disjunction".
  void emit(const Poly& poly, EqTag tag, const Poly& guard) {
    if (guard.is_zero()) {
      sys_.equalities.push_back({poly, tag});
    } else {
      sys_.equalities.push_back({guard * poly, EqTag::guard});
    }
  }

  void convert(const Formula& f, const Poly& guard) {
    const uint32_t idx = next_index_++;
    switch (f.kind) {
      case Formula::Kind::neg:
        fail(errc::invalid, "equality conversion requires a negation-free formula");
      case Formula::Kind::atom: {
        const Poly& p = f.atom.poly;
        EqualitySystem::AtomAux aux;
        switch (f.atom.rel) {
          case Rel::eq:
            emit(p, EqTag::atom, guard);
            break;
          case Rel::ge: {
            aux.slack = fresh("slack", slack_n_);
            const Poly u = Poly::variable(aux.slack);
            emit(p - u * u, EqTag::slack, guard);
            break;
          }
          case Rel::gt: {
            aux.slack = fresh("slack", slack_n_);
            aux.inverse = fresh("inv", inv_n_);
            const Poly u = Poly::variable(aux.slack);
            const Poly v = Poly::variable(aux.inverse);
            emit(p - u * u, EqTag::slack, guard);
            emit(u * v - Poly::constant(1), EqTag::slack, guard);
            break;
          }
          case Rel::neq: {
            aux.inverse = fresh("inv", inv_n_);
            const Poly v = Poly::variable(aux.inverse);
            emit(p * v - Poly::constant(1), EqTag::slack, guard);
            break;
          }
        }
        if (!aux.slack.empty() || !aux.inverse.empty()) sys_.atom_aux[idx] = aux;
        break;
      }
      case Formula::Kind::conj:
        for (const Formula& child : f.children) convert(child, guard);
        break;
      case Formula::Kind::disj: {
        std::vector<std::string> selectors;
        Poly sum;
        for (size_t j = 0; j < f.children.size(); ++j) selectors.push_back(fresh("sel", sel_n_));
        for (const std::string& s : selectors) sum += Poly::variable(s);
        emit(sum - Poly::constant(1), EqTag::selector, guard);
        for (const std::string& name : selectors) {
          const Poly s = Poly::variable(name);
          emit(s * (Poly::constant(1) - s), EqTag::selector, guard);
        }
        sys_.or_selectors[idx] = selectors;
        for (size_t j = 0; j < f.children.size(); ++j) {
          const Poly s = Poly::variable(selectors[j]);
          convert(f.children[j], guard.is_zero() ? s : guard * s);
        }
        break;
      }
    }
  }

  EqualitySystem sys_;
  uint32_t next_index_ = 0;
  uint32_t slack_n_ = 0;
  uint32_t inv_n_ = 0;
  uint32_t sel_n_ = 0;
};

}  // namespace

EqualitySystem to_equality_form(const Formula& f) { return Converter().run(f); }

}  // namespace armred
