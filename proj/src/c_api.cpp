#define BRACOID_BUILDING
#include "bracoid/bracoid.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "bracoid/catalog.hpp"
#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"
#include "bracoid/manifest.hpp"
#include "bracoid/suites.hpp"

struct bracoid_object {
  bracoid::Manifest manifest;
};

struct bracoid_report {
  bracoid::Report report;
};

struct bracoid_listing {
  bracoid::FiniteGroup acting;
  bracoid::FiniteGroup carrier;
  std::string acting_name;
  std::string carrier_name;
  std::vector<bracoid::GeneralizedSkewBracoid> items;
  std::vector<std::size_t> classes;
  bool with_classes = false;
};

namespace {

using namespace bracoid;

thread_local std::string g_error;

bracoid_status fail(bracoid_status s, std::string what) {
  g_error = std::move(what);
  return s;
}

template <class F>
bracoid_status guarded(F&& f) {
  try {
    g_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(BRACOID_PARSE_ERROR, e.what());
  } catch (const ShapeError& e) {
    return fail(BRACOID_PARSE_ERROR, e.what());
  } catch (const BoundExceeded& e) {
    return fail(BRACOID_RESOURCE_BOUND, e.what());
  } catch (const PreconditionError& e) {
    return fail(BRACOID_PRECONDITION, e.what());
  } catch (const KernelBug& e) {
    return fail(BRACOID_KERNEL_BUG, std::string("kernel bug: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(BRACOID_RESOURCE_BOUND, "out of memory");
  } catch (const std::exception& e) {
    return fail(BRACOID_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class T>
const T& expect(const Manifest& m, std::string_view functor, std::string_view wanted) {
  const T* p = std::get_if<T>(&m.payload);
  if (p == nullptr) {
    throw PreconditionError(std::string(functor) + ": expected a " + std::string(wanted) + " manifest, got " +
                            std::string(kind_name(m.kind())));
  }
  return *p;
}

FiniteGroup as_group(const Manifest& m, std::string_view what) {
  const GroupData& d = expect<GroupData>(m, what, "group");
  Report v = validate_group(d.table, d.unit);
  if (const auto* f = v.first_failure()) throw PreconditionError(std::string(what) + ": not a group (" + f->equation + " fails)");
  return FiniteGroup(d.table, d.unit, m.name);
}

void check_dims(const HopfBracoid& b, std::string_view what) {
  check_dim(b.h_dim(), what);
  check_dim(b.b_dim(), what);
}

Payload build_one(std::string_view functor, const Manifest& in) {
  if (functor == "L") return linearize_group(as_group(in, "L"));
  if (functor == "P") {
    if (const auto* m = std::get_if<GskbMorphismData>(&in.payload)) {
      return BracoidMorphismData{functor_P(m->source), functor_P(m->target), functor_P(m->map, m->source, m->target)};
    }
    const auto& b = expect<GeneralizedSkewBracoid>(in, "P", "gskb or gskb morphism");
    if (!check_gskb(b).passed()) throw PreconditionError("P: input is not a generalized skew bracoid");
    return functor_P(b);
  }
  if (functor == "R") {
    if (const auto* m = std::get_if<BracoidMorphismData>(&in.payload)) {
      return GskbMorphismData{functor_R(m->source), functor_R(m->target), functor_R(m->map, m->source, m->target)};
    }
    return functor_R(expect<HopfBracoid>(in, "R", "bracoid or bracoid morphism"));
  }
  if (functor == "T") return functor_T(expect<HopfBrace>(in, "T", "brace"));
  if (functor == "Tprime") return functor_Tprime(expect<HopfBrace>(in, "Tprime", "brace"));
  if (functor == "F") return functor_F(expect<Cocycle>(in, "F", "cocycle"));
  if (functor == "G") return functor_Gc(expect<HopfBracoid>(in, "G", "bracoid"));
  if (functor == "Q") return invertible_to_brace(expect<Cocycle>(in, "Q", "cocycle"));
  if (functor == "opposite") return opposite_bracoid(expect<HopfBracoid>(in, "opposite", "bracoid"));
  throw PreconditionError("unknown functor '" + std::string(functor) + "'");
}

}  // namespace

extern "C" {

const char* bracoid_last_error(void) { return g_error.c_str(); }

void bracoid_string_free(char* s) { std::free(s); }

void bracoid_set_max_dim(size_t n) { bracoid::set_max_dim(n); }

size_t bracoid_max_dim(void) {
  size_t v = 0;
  guarded([&] {
    v = bracoid::max_dim();
    return BRACOID_OK;
  });
  return v;
}

bracoid_status bracoid_object_parse(const char* text, bracoid_object** out) {
  if (text == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new bracoid_object{parse_manifest(text)};
    return BRACOID_OK;
  });
}

bracoid_status bracoid_object_load(const char* path, bracoid_object** out) {
  if (path == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new bracoid_object{load_manifest(path)};
    return BRACOID_OK;
  });
}

void bracoid_object_free(bracoid_object* obj) { delete obj; }

const char* bracoid_object_kind(const bracoid_object* obj) {
  if (obj == nullptr) return "";
  return kind_name(obj->manifest.kind()).data();
}

bracoid_status bracoid_object_serialize(const bracoid_object* obj, char** out) {
  if (obj == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(serialize_manifest(obj->manifest));
    return BRACOID_OK;
  });
}

int bracoid_object_equal(const bracoid_object* a, const bracoid_object* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->manifest.payload == b->manifest.payload ? 1 : 0;
}

bracoid_status bracoid_check(const bracoid_object* obj, int full, bracoid_report** out) {
  if (obj == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new bracoid_report{check_manifest(obj->manifest, full ? Suite::full : Suite::basic)};
    return BRACOID_OK;
  });
}

int bracoid_report_passed(const bracoid_report* r) { return r != nullptr && r->report.passed() ? 1 : 0; }

bracoid_status bracoid_report_render(const bracoid_report* r, int machine, char** out) {
  if (r == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(machine ? render_machine(r->report) : render_text(r->report));
    return BRACOID_OK;
  });
}

void bracoid_report_free(bracoid_report* r) { delete r; }

bracoid_status bracoid_build(const char* functor, const bracoid_object* const* inputs, size_t count,
                             bracoid_object** out) {
  if (functor == nullptr || out == nullptr || (count > 0 && inputs == nullptr)) {
    return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  for (size_t i = 0; i < count; ++i)
    if (inputs[i] == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null input");
  const std::string f(functor);
  const size_t wanted = f == "tensor" ? 2 : 1;
  if (count != wanted) {
    return fail(BRACOID_INVALID_ARGUMENT,
                f + ": expected " + std::to_string(wanted) + " input(s), got " + std::to_string(count));
  }
  return guarded([&] {
    const Manifest& first = inputs[0]->manifest;
    Manifest m{first.name, first.notes, GroupData{}};
    if (f == "tensor") {
      const auto& a = expect<HopfBracoid>(first, "tensor", "bracoid");
      const auto& b = expect<HopfBracoid>(inputs[1]->manifest, "tensor", "bracoid");
      check_dim(a.h_dim() * b.h_dim(), "tensor");
      check_dim(a.b_dim() * b.b_dim(), "tensor");
      m.payload = tensor_bracoid(a, b);
    } else {
      m.payload = build_one(f, first);
    }
    if (const auto* b = std::get_if<HopfBracoid>(&m.payload)) check_dims(*b, f);
    *out = new bracoid_object{std::move(m)};
    return BRACOID_OK;
  });
}

bracoid_status bracoid_enumerate(const bracoid_object* acting, const bracoid_object* carrier, size_t max_order,
                                 unsigned jobs, int with_classes, bracoid_listing** out) {
  if (acting == nullptr || carrier == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    FiniteGroup g = as_group(acting->manifest, "enumerate: G");
    FiniteGroup n = as_group(carrier->manifest, "enumerate: N");
    for (const auto* grp : {&g, &n}) {
      if (grp->order() > max_order) {
        throw BoundExceeded("group order " + std::to_string(grp->order()) + " exceeds --max-order " +
                            std::to_string(max_order));
      }
    }
    EnumerationOptions opts{max_order, jobs == 0 ? 1u : jobs};
    auto items = enumerate_gskb(g, n, opts);
    auto* l = new bracoid_listing{g, n, acting->manifest.name, carrier->manifest.name, std::move(items), {}, false};
    if (with_classes) {
      try {
        l->classes = bracoid::iso_classes(l->items);
      } catch (...) {
        delete l;
        throw;
      }
      l->with_classes = true;
    }
    *out = l;
    return BRACOID_OK;
  });
}

size_t bracoid_listing_count(const bracoid_listing* l) { return l == nullptr ? 0 : l->items.size(); }

size_t bracoid_listing_class_count(const bracoid_listing* l) {
  if (l == nullptr || !l->with_classes || l->classes.empty()) return 0;
  size_t m = 0;
  for (auto c : l->classes) m = std::max(m, c + 1);
  return m;
}

bracoid_status bracoid_listing_get(const bracoid_listing* l, size_t i, bracoid_object** out) {
  if (l == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (i >= l->items.size()) return fail(BRACOID_INVALID_ARGUMENT, "listing index out of range");
  return guarded([&] {
    std::string name = l->acting_name + " on " + l->carrier_name + " #" + std::to_string(i);
    *out = new bracoid_object{Manifest{std::move(name), {}, l->items[i]}};
    return BRACOID_OK;
  });
}

bracoid_status bracoid_listing_render(const bracoid_listing* l, int machine, char** out) {
  if (l == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s;
    if (machine) {
      nlohmann::json actions = nlohmann::json::array();
      for (const auto& b : l->items) actions.push_back(b.action.table);
      nlohmann::json j{{"G", l->acting_name}, {"N", l->carrier_name}, {"count", l->items.size()}, {"actions", actions}};
      if (l->with_classes) {
        j["classes"] = l->classes;
        j["class_count"] = bracoid_listing_class_count(l);
      }
      s = j.dump() + "\n";
    } else {
      s = "G: " + l->acting_name + " (order " + std::to_string(l->acting.order()) + ")\n";
      s += "N: " + l->carrier_name + " (order " + std::to_string(l->carrier.order()) + ")\n";
      s += "count: " + std::to_string(l->items.size()) + "\n";
      if (l->with_classes) s += "iso classes: " + std::to_string(bracoid_listing_class_count(l)) + "\n";
      for (size_t i = 0; i < l->items.size(); ++i) {
        s += "#" + std::to_string(i);
        if (l->with_classes) s += " [class " + std::to_string(l->classes[i]) + "]";
        s += (is_transitive(l->items[i]) ? " transitive" : " intransitive");
        s += ":";
        for (const auto& row : l->items[i].action.table) {
          s += " [";
          for (size_t k = 0; k < row.size(); ++k) s += (k ? " " : "") + std::to_string(row[k]);
          s += "]";
        }
        s += "\n";
      }
    }
    *out = dup(s);
    return BRACOID_OK;
  });
}

void bracoid_listing_free(bracoid_listing* l) { delete l; }

bracoid_status bracoid_roundtrip(const char* pair, const bracoid_object* obj, bracoid_report** out) {
  if (pair == nullptr || obj == nullptr || out == nullptr) return fail(BRACOID_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const std::string p(pair);
  if (p != "PR" && p != "FG") return fail(BRACOID_INVALID_ARGUMENT, "unknown pair '" + p + "' (expected PR or FG)");
  return guarded([&] {
    const Manifest& m = obj->manifest;
    std::string subject = p + " roundtrip on " + std::string(kind_name(m.kind()));
    if (!m.name.empty()) subject += " " + m.name;
    Report r(subject);
    if (p == "PR") {
      if (const auto* b = std::get_if<GeneralizedSkewBracoid>(&m.payload)) {
        if (!check_gskb(*b).passed()) throw PreconditionError("PR: input is not a generalized skew bracoid");
        CheckResult c{"R(P(b)) equals b", functor_R(functor_P(*b)) == *b ? Status::pass : Status::fail, std::nullopt,
                      {}, true};
        require_theorem(r, std::move(c));
      } else if (const auto* d = std::get_if<GskbMorphismData>(&m.payload)) {
        if (!check_gskb_morphism(d->source, d->target, d->map).passed())
          throw PreconditionError("PR: input is not a gskb morphism");
        const HopfBracoid ps = functor_P(d->source);
        const HopfBracoid pt = functor_P(d->target);
        const bool same = functor_R(functor_P(d->map, d->source, d->target), ps, pt) == d->map;
        require_theorem(r, CheckResult{"R(P(m)) equals m", same ? Status::pass : Status::fail, std::nullopt, {}, true});
      } else {
        r.merge(counit_identity_check(expect<HopfBracoid>(m, "PR", "gskb, gskb morphism or bracoid")));
      }
    } else {
      if (const auto* c = std::get_if<Cocycle>(&m.payload)) {
        r.merge(cocycle_roundtrip(*c));
      } else {
        r.merge(bracoid_roundtrip(expect<HopfBracoid>(m, "FG", "cocycle or bracoid")));
      }
    }
    *out = new bracoid_report{std::move(r)};
    return BRACOID_OK;
  });
}

}  // extern "C"
