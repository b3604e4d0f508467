#include "nbe/nbe.hpp"

namespace smltt {

Env Env::extend(V v) const {
  Env e;
  e.head = std::make_shared<const EnvNode>(EnvNode{std::move(v), head});
  e.size = size + 1;
  e.globals = globals;
  return e;
}

const V& Env::lookup(std::uint32_t i) const {
  if (i >= size) throw EvalError("variable index out of scope");
  const EnvNode* n = head.get();
  while (i-- > 0) n = n->next.get();
  return n->val;
}

V Closure::apply(const std::vector<V>& args) const {
  if (native) return native(args);
  Env e = env;
  for (const auto& a : args) e = e.extend(a);
  return eval(e, body);
}

Closure nativeClosure(int arity, std::function<V(const std::vector<V>&)> fn) {
  Closure c;
  c.native = std::move(fn);
  c.arity = arity;
  return c;
}

const V& GlobalEntry::value() const {
  if (!valueCache) {
    if (!body) throw EvalError("constant " + name + " has no definition");
    Env env;
    env.globals = table;
    valueCache = eval(env, body);
  }
  return valueCache;
}

std::shared_ptr<const GlobalEntry> GlobalTable::find(const std::string& name) const {
  auto it = map_.find(name);
  if (it == map_.end()) return nullptr;
  return it->second;
}

void GlobalTable::add(std::shared_ptr<GlobalEntry> e) {
  e->table = this;
  order_.push_back(e->name);
  map_[e->name] = std::move(e);
}

namespace val {

V make(VTag t, std::vector<V> vs) {
  auto v = std::make_shared<Value>();
  v->tag = t;
  v->vs = std::move(vs);
  return v;
}

V withClosure(VTag t, std::vector<V> vs, Closure c) {
  auto v = std::make_shared<Value>();
  v->tag = t;
  v->vs = std::move(vs);
  v->clo = std::move(c);
  return v;
}

V var(std::uint32_t level) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head.kind = HeadKind::Var;
  v->head.level = level;
  return v;
}

V constant(const std::string& name, std::shared_ptr<const GlobalEntry> def) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head.kind = HeadKind::Const;
  v->head.name = name;
  v->head.def = std::move(def);
  return v;
}

V U() {
  static const V u = make(VTag::U);
  return u;
}
V size() {
  static const V s = make(VTag::Size);
  return s;
}
V boolean() {
  static const V b = make(VTag::Bool);
  return b;
}
V top() {
  static const V t = make(VTag::Top);
  return t;
}
V bot() {
  static const V b = make(VTag::Bot);
  return b;
}
V pi(V dom, Closure cod) { return withClosure(VTag::Pi, {std::move(dom)}, std::move(cod)); }
V sigma(V dom, Closure cod) { return withClosure(VTag::Sigma, {std::move(dom)}, std::move(cod)); }
V arrow(V dom, V cod) {
  return pi(std::move(dom), nativeClosure(1, [cod](const std::vector<V>&) { return cod; }));
}
V id(V ty, V a, V b) { return make(VTag::Id, {std::move(ty), std::move(a), std::move(b)}); }

}  // namespace val

namespace {

V pushFrame(const V& n, Frame f) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head = n->head;
  v->spine = n->spine;
  v->spine.push_back(std::move(f));
  return v;
}

Frame frame(FrameKind k) {
  Frame f;
  f.kind = k;
  return f;
}

V applyFrame(const V& v, const Frame& f) {
  switch (f.kind) {
    case FrameKind::App: return vApp(v, f.a);
    case FrameKind::ForApp: return vForApp(v, f.a);
    case FrameKind::Proj1: return vProj1(v);
    case FrameKind::Proj2: return vProj2(v);
    case FrameKind::El: return vEl(v);
    case FrameKind::J: return vJ(f.m, f.n, f.a, f.b, v);
    case FrameKind::BotInd: return vBotInd(f.m, v);
    case FrameKind::TopInd: return vTopInd(f.m, f.a, v);
    case FrameKind::BoolInd: return vBoolInd(f.m, f.a, f.b, v);
    case FrameKind::ExInd: return vExInd(f.m, f.n, v);
  }
  throw EvalError("unknown frame");
}

const V& unfoldOnce(const V& v) {
  if (!v->unfolded) {
    V cur = v->head.def->value();
    for (const auto& f : v->spine) cur = applyFrame(cur, f);
    v->unfolded = cur;
  }
  return v->unfolded;
}

Closure clo(const Env& env, const TermP& body, int arity = 1) {
  Closure c;
  c.env = env;
  c.body = body;
  c.arity = arity;
  return c;
}

Closure elClosure(const Closure& c) {
  return nativeClosure(c.arity, [c](const std::vector<V>& args) { return vEl(c.apply(args)); });
}

}  // namespace

V vApp(const V& f, const V& a) {
  if (f->tag == VTag::Lam) return f->clo.apply(a);
  if (f->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::App);
    fr.a = a;
    return pushFrame(f, std::move(fr));
  }
  throw EvalError("application of a non-function value");
}

V vForApp(const V& f, const V& s) {
  if (f->tag == VTag::ForLam) return f->clo.apply(s);
  if (f->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::ForApp);
    fr.a = s;
    return pushFrame(f, std::move(fr));
  }
  throw EvalError("size application of a non-quantified value");
}

V vProj1(const V& p) {
  if (p->tag == VTag::Pair) return p->vs[0];
  if (p->tag == VTag::Neutral) return pushFrame(p, frame(FrameKind::Proj1));
  throw EvalError("projection from a non-pair value");
}

V vProj2(const V& p) {
  if (p->tag == VTag::Pair) return p->vs[1];
  if (p->tag == VTag::Neutral) return pushFrame(p, frame(FrameKind::Proj2));
  throw EvalError("projection from a non-pair value");
}

V vEl(const V& c) {
  switch (c->tag) {
    case VTag::BotCode: return val::bot();
    case VTag::TopCode: return val::top();
    case VTag::BoolCode: return val::boolean();
    case VTag::PiCode: return val::pi(vEl(c->vs[0]), elClosure(c->clo));
    case VTag::SigCode: return val::sigma(vEl(c->vs[0]), elClosure(c->clo));
    case VTag::IdCode: return val::id(vEl(c->vs[0]), c->vs[1], c->vs[2]);
    case VTag::LeqCode:
    case VTag::ExistsCode:
    case VTag::ForallCode:
      return val::make(VTag::El, {c});
    case VTag::Neutral: return pushFrame(c, frame(FrameKind::El));
    default: throw EvalError("El applied to a value that is not a code");
  }
}

V vJ(const Closure& motive, const Closure& base, const V& x, const V& y, const V& p) {
  if (p->tag == VTag::Refl) return base.apply(x);
  if (p->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::J);
    fr.m = motive;
    fr.n = base;
    fr.a = x;
    fr.b = y;
    return pushFrame(p, std::move(fr));
  }
  throw EvalError("J applied to a non-path value");
}

V vBotInd(const Closure& motive, const V& s) {
  if (s->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::BotInd);
    fr.m = motive;
    return pushFrame(s, std::move(fr));
  }
  throw EvalError("ind_Bot applied to a canonical value");
}

V vTopInd(const Closure& motive, const V& base, const V& s) {
  if (s->tag == VTag::Star) return base;
  if (s->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::TopInd);
    fr.m = motive;
    fr.a = base;
    return pushFrame(s, std::move(fr));
  }
  throw EvalError("ind_Top applied to a non-unit value");
}

V vBoolInd(const Closure& motive, const V& t, const V& f, const V& s) {
  if (s->tag == VTag::Tt) return t;
  if (s->tag == VTag::Ff) return f;
  if (s->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::BoolInd);
    fr.m = motive;
    fr.a = t;
    fr.b = f;
    return pushFrame(s, std::move(fr));
  }
  throw EvalError("ind_Bool applied to a non-boolean value");
}

V vExInd(const Closure& motive, const Closure& branch, const V& e) {
  if (e->tag == VTag::ExPair) return branch.apply({e->vs[0], e->vs[1]});
  if (e->tag == VTag::Neutral) {
    Frame fr = frame(FrameKind::ExInd);
    fr.m = motive;
    fr.n = branch;
    return pushFrame(e, std::move(fr));
  }
  throw EvalError("ind_Ex applied to a non-package value");
}

V force(const V& v) {
  V cur = v;
  while (cur->unfoldable()) cur = unfoldOnce(cur);
  return cur;
}

V eval(const Env& env, const TermP& t) {
  const auto& k = t->kids;
  switch (t->tag) {
    case Tag::Var: return env.lookup(t->index);
    case Tag::U: return val::U();
    case Tag::El: return vEl(eval(env, k[0]));
    case Tag::Pi: return val::pi(eval(env, k[0]), clo(env, k[1]));
    case Tag::Lam: return val::withClosure(VTag::Lam, {}, clo(env, k[0]));
    case Tag::App: return vApp(eval(env, k[0]), eval(env, k[1]));
    case Tag::Sigma: return val::sigma(eval(env, k[0]), clo(env, k[1]));
    case Tag::Pair: return val::make(VTag::Pair, {eval(env, k[0]), eval(env, k[1])});
    case Tag::Proj1: return vProj1(eval(env, k[0]));
    case Tag::Proj2: return vProj2(eval(env, k[0]));
    case Tag::Id: return val::id(eval(env, k[0]), eval(env, k[1]), eval(env, k[2]));
    case Tag::Refl: return val::make(VTag::Refl, {eval(env, k[0])});
    case Tag::J:
      return vJ(clo(env, k[0], 3), clo(env, k[1]), eval(env, k[2]), eval(env, k[3]), eval(env, k[4]));
    case Tag::Bot: return val::bot();
    case Tag::BotInd: return vBotInd(clo(env, k[0]), eval(env, k[1]));
    case Tag::Top: return val::top();
    case Tag::Star: return val::make(VTag::Star);
    case Tag::TopInd: return vTopInd(clo(env, k[0]), eval(env, k[1]), eval(env, k[2]));
    case Tag::Bool: return val::boolean();
    case Tag::Tt: return val::make(VTag::Tt);
    case Tag::Ff: return val::make(VTag::Ff);
    case Tag::BoolInd:
      return vBoolInd(clo(env, k[0]), eval(env, k[1]), eval(env, k[2]), eval(env, k[3]));
    case Tag::Size: return val::size();
    case Tag::Sz0: return val::make(VTag::Sz0);
    case Tag::SzSuc: return val::make(VTag::SzSuc, {eval(env, k[0])});
    case Tag::LeqCode: return val::make(VTag::LeqCode, {eval(env, k[0]), eval(env, k[1])});
    case Tag::Const: {
      std::shared_ptr<const GlobalEntry> g;
      if (env.globals) g = env.globals->find(t->name);
      if (!g) throw EvalError("unknown constant " + t->name);
      return val::constant(t->name, g->body ? g : nullptr);
    }
    case Tag::Fix:
    case Tag::FixBeta: {
      auto v = std::make_shared<Value>();
      v->tag = VTag::Neutral;
      v->head.kind = t->tag == Tag::Fix ? HeadKind::Fix : HeadKind::FixBeta;
      v->head.arg = eval(env, k[0]);
      return v;
    }
    case Tag::ExistsCode: return val::withClosure(VTag::ExistsCode, {}, clo(env, k[0]));
    case Tag::ExPair: return val::make(VTag::ExPair, {eval(env, k[0]), eval(env, k[1])});
    case Tag::ExInd: return vExInd(clo(env, k[0]), clo(env, k[1], 2), eval(env, k[2]));
    case Tag::ForallCode: return val::withClosure(VTag::ForallCode, {}, clo(env, k[0]));
    case Tag::ForLam: return val::withClosure(VTag::ForLam, {}, clo(env, k[0]));
    case Tag::ForApp: return vForApp(eval(env, k[0]), eval(env, k[1]));
    case Tag::BotCode: return val::make(VTag::BotCode);
    case Tag::TopCode: return val::make(VTag::TopCode);
    case Tag::BoolCode: return val::make(VTag::BoolCode);
    case Tag::PiCode: return val::withClosure(VTag::PiCode, {eval(env, k[0])}, clo(env, k[1]));
    case Tag::SigCode: return val::withClosure(VTag::SigCode, {eval(env, k[0])}, clo(env, k[1]));
    case Tag::IdCode: return val::make(VTag::IdCode, {eval(env, k[0]), eval(env, k[1]), eval(env, k[2])});
    case Tag::Ann: return eval(env, k[0]);
  }
  throw EvalError("unknown term former");
}

namespace {

std::vector<V> freshVars(std::uint32_t depth, int n) {
  std::vector<V> xs;
  for (int i = 0; i < n; ++i) xs.push_back(val::var(depth + static_cast<std::uint32_t>(i)));
  return xs;
}

TermP rbClosure(std::uint32_t depth, const Closure& c, ReadbackOptions o) {
  return readback(depth + static_cast<std::uint32_t>(c.arity), c.apply(freshVars(depth, c.arity)), o);
}

}  // namespace

TermP readback(std::uint32_t d, const V& v0, ReadbackOptions o) {
  V v = o.unfold ? force(v0) : v0;
  const auto& vs = v->vs;
  switch (v->tag) {
    case VTag::U: return mk::U();
    case VTag::Pi: return mk::pi(readback(d, vs[0], o), rbClosure(d, v->clo, o));
    case VTag::Lam: return mk::lam(rbClosure(d, v->clo, o));
    case VTag::Sigma: return mk::sigma(readback(d, vs[0], o), rbClosure(d, v->clo, o));
    case VTag::Pair: return mk::pair(readback(d, vs[0], o), readback(d, vs[1], o));
    case VTag::Id: return mk::id(readback(d, vs[0], o), readback(d, vs[1], o), readback(d, vs[2], o));
    case VTag::Refl: return mk::refl(readback(d, vs[0], o));
    case VTag::Bot: return mk::bot();
    case VTag::Top: return mk::top();
    case VTag::Star: return mk::star();
    case VTag::Bool: return mk::boolean();
    case VTag::Tt: return mk::tt();
    case VTag::Ff: return mk::ff();
    case VTag::Size: return mk::size();
    case VTag::Sz0: return mk::sz0();
    case VTag::SzSuc: return mk::szSuc(readback(d, vs[0], o));
    case VTag::BotCode: return mk::botCode();
    case VTag::TopCode: return mk::topCode();
    case VTag::BoolCode: return mk::boolCode();
    case VTag::PiCode: return mk::piCode(readback(d, vs[0], o), rbClosure(d, v->clo, o));
    case VTag::SigCode: return mk::sigCode(readback(d, vs[0], o), rbClosure(d, v->clo, o));
    case VTag::IdCode: return mk::idCode(readback(d, vs[0], o), readback(d, vs[1], o), readback(d, vs[2], o));
    case VTag::LeqCode: return mk::leq(readback(d, vs[0], o), readback(d, vs[1], o));
    case VTag::ExistsCode: return mk::exists(rbClosure(d, v->clo, o));
    case VTag::ForallCode: return mk::forall(rbClosure(d, v->clo, o));
    case VTag::ExPair: return mk::exPair(readback(d, vs[0], o), readback(d, vs[1], o));
    case VTag::ForLam: return mk::forLam(rbClosure(d, v->clo, o));
    case VTag::El: return mk::el(readback(d, vs[0], o));
    case VTag::Neutral: break;
  }
  TermP t;
  switch (v->head.kind) {
    case HeadKind::Var:
      if (v->head.level >= d) throw EvalError("readback of a variable beyond the current depth");
      t = mk::var(d - 1 - v->head.level);
      break;
    case HeadKind::Const: t = mk::constant(v->head.name); break;
    case HeadKind::Fix: t = mk::fix(readback(d, v->head.arg, o)); break;
    case HeadKind::FixBeta: t = mk::fixBeta(readback(d, v->head.arg, o)); break;
  }
  for (const auto& f : v->spine) {
    switch (f.kind) {
      case FrameKind::App: t = mk::app(t, readback(d, f.a, o)); break;
      case FrameKind::ForApp: t = mk::forApp(t, readback(d, f.a, o)); break;
      case FrameKind::Proj1: t = mk::proj1(t); break;
      case FrameKind::Proj2: t = mk::proj2(t); break;
      case FrameKind::El: t = mk::el(t); break;
      case FrameKind::J:
        t = mk::J(rbClosure(d, f.m, o), rbClosure(d, f.n, o), readback(d, f.a, o), readback(d, f.b, o), t);
        break;
      case FrameKind::BotInd: t = mk::botInd(rbClosure(d, f.m, o), t); break;
      case FrameKind::TopInd: t = mk::topInd(rbClosure(d, f.m, o), readback(d, f.a, o), t); break;
      case FrameKind::BoolInd:
        t = mk::boolInd(rbClosure(d, f.m, o), readback(d, f.a, o), readback(d, f.b, o), t);
        break;
      case FrameKind::ExInd: t = mk::exInd(rbClosure(d, f.m, o), rbClosure(d, f.n, o), t); break;
    }
  }
  return t;
}

namespace {

bool convClosure(std::uint32_t d, const Closure& a, const Closure& b) {
  auto xs = freshVars(d, a.arity);
  return conv(d + static_cast<std::uint32_t>(a.arity), a.apply(xs), b.apply(xs));
}

bool convHead(std::uint32_t d, const Head& a, const Head& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case HeadKind::Var: return a.level == b.level;
    case HeadKind::Const: return a.name == b.name;
    case HeadKind::Fix:
    case HeadKind::FixBeta: return conv(d, a.arg, b.arg);
  }
  return false;
}

bool convFrame(std::uint32_t d, const Frame& a, const Frame& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FrameKind::App:
    case FrameKind::ForApp: return conv(d, a.a, b.a);
    case FrameKind::Proj1:
    case FrameKind::Proj2:
    case FrameKind::El: return true;
    case FrameKind::J:
      return convClosure(d, a.m, b.m) && convClosure(d, a.n, b.n) && conv(d, a.a, b.a) && conv(d, a.b, b.b);
    case FrameKind::BotInd: return convClosure(d, a.m, b.m);
    case FrameKind::TopInd: return convClosure(d, a.m, b.m) && conv(d, a.a, b.a);
    case FrameKind::BoolInd:
      return convClosure(d, a.m, b.m) && conv(d, a.a, b.a) && conv(d, a.b, b.b);
    case FrameKind::ExInd: return convClosure(d, a.m, b.m) && convClosure(d, a.n, b.n);
  }
  return false;
}

bool convSpine(std::uint32_t d, const V& a, const V& b) {
  if (!convHead(d, a->head, b->head)) return false;
  if (a->spine.size() != b->spine.size()) return false;
  for (std::size_t i = 0; i < a->spine.size(); ++i)
    if (!convFrame(d, a->spine[i], b->spine[i])) return false;
  return true;
}

bool etaTarget(const V& v, VTag t) { return v->tag == t || v->tag == VTag::Neutral; }

}  // namespace

bool conv(std::uint32_t d, const V& a, const V& b) {
  if (a == b) return true;
  if (a->tag == VTag::Neutral && b->tag == VTag::Neutral && a->head.kind == HeadKind::Const &&
      b->head.kind == HeadKind::Const && a->head.name == b->head.name) {
    if (convSpine(d, a, b)) return true;
    if (a->unfoldable() && b->unfoldable()) return conv(d, unfoldOnce(a), unfoldOnce(b));
    return false;
  }
  if (a->unfoldable()) return conv(d, unfoldOnce(a), b);
  if (b->unfoldable()) return conv(d, a, unfoldOnce(b));

  if (a->tag == VTag::Lam || b->tag == VTag::Lam) {
    if (!etaTarget(a, VTag::Lam) || !etaTarget(b, VTag::Lam)) return false;
    V x = val::var(d);
    return conv(d + 1, vApp(a, x), vApp(b, x));
  }
  if (a->tag == VTag::ForLam || b->tag == VTag::ForLam) {
    if (!etaTarget(a, VTag::ForLam) || !etaTarget(b, VTag::ForLam)) return false;
    V x = val::var(d);
    return conv(d + 1, vForApp(a, x), vForApp(b, x));
  }
  if (a->tag == VTag::Pair || b->tag == VTag::Pair) {
    if (!etaTarget(a, VTag::Pair) || !etaTarget(b, VTag::Pair)) return false;
    return conv(d, vProj1(a), vProj1(b)) && conv(d, vProj2(a), vProj2(b));
  }
  if (a->tag != b->tag) return false;
  const auto& x = a->vs;
  const auto& y = b->vs;
  switch (a->tag) {
    case VTag::Pi:
    case VTag::Sigma:
    case VTag::PiCode:
    case VTag::SigCode:
      return conv(d, x[0], y[0]) && convClosure(d, a->clo, b->clo);
    case VTag::ExistsCode:
    case VTag::ForallCode:
      return convClosure(d, a->clo, b->clo);
    case VTag::Neutral: return convSpine(d, a, b);
    default:
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!conv(d, x[i], y[i])) return false;
      return true;
  }
}

bool convert(std::uint32_t d, const V& a, const V& b, const V& ty0) {
  V ty = force(ty0);
  if (ty->tag == VTag::Pi) {
    V x = val::var(d);
    return convert(d + 1, vApp(a, x), vApp(b, x), ty->clo.apply(x));
  }
  if (ty->tag == VTag::Sigma) {
    V a1 = vProj1(a);
    return convert(d, a1, vProj1(b), ty->vs[0]) && convert(d, vProj2(a), vProj2(b), ty->clo.apply(a1));
  }
  if (ty->tag == VTag::El && ty->vs[0]->tag == VTag::ForallCode) {
    V x = val::var(d);
    return convert(d + 1, vForApp(a, x), vForApp(b, x), vEl(ty->vs[0]->clo.apply(x)));
  }
  return conv(d, a, b);
}

}  // namespace smltt
