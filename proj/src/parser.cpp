#include "bloblint/parser.hpp"

#include <algorithm>
#include <set>

#include "bloblint/errors.hpp"
#include "bloblint/lexer.hpp"

namespace bloblint {

namespace {

const std::set<std::string> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};

const std::set<std::string> kModifierWords = {
    "public", "private",   "protected", "static",       "final",
    "abstract", "native",  "transient", "synchronized", "volatile",
    "strictfp", "default"};

// Statements we do not model; the generic skipper turns them into Opaque.
const std::set<std::string> kOpaqueStarters = {
    "do", "continue", "throw", "assert", "synchronized", "yield", "enum"};

class Parser {
 public:
  Parser(const std::string& text, std::vector<Token> toks, SyntaxTree& tree)
      : text_(text), toks_(std::move(toks)), tree_(tree) {}

  CompilationUnit* run() {
    auto* unit = tree_.make<CompilationUnit>();
    unit->span = {0, text_.size()};
    if (cur().is_ident("package")) {
      auto* pkg = tree_.make<PackageDecl>();
      std::size_t start = cur().span.begin;
      advance();
      pkg->name = qualified_name();
      expect_punct(";", "package declaration");
      pkg->span = {start, last_end_};
      unit->package = pkg;
    }
    while (cur().is_ident("import")) {
      auto* imp = tree_.make<ImportDecl>();
      std::size_t start = cur().span.begin;
      advance();
      if (cur().is_ident("static")) {
        imp->is_static = true;
        advance();
      }
      imp->path = qualified_name();
      if (accept_punct(".")) {
        expect_punct("*", "import");
        imp->is_star = true;
      }
      expect_punct(";", "import");
      imp->span = {start, last_end_};
      unit->imports.push_back(imp);
    }
    while (!cur().is(TokKind::End)) {
      if (accept_punct(";")) continue;
      unit->types.push_back(type_decl_or_opaque());
    }
    return unit;
  }

 private:
  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  SyntaxTree& tree_;

  // --- token helpers ---------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  void advance() {
    if (!cur().is(TokKind::End)) {
      last_end_ = cur().span.end;
      ++pos_;
    }
  }
  bool accept_punct(const char* p) {
    if (cur().is_punct(p)) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_ident(const char* name) {
    if (cur().is_ident(name)) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }
  void expect_punct(const char* p, const char* ctx) {
    if (!accept_punct(p))
      fail(std::string("expected '") + p + "' in " + ctx + ", got '" + cur().text + "'");
  }
  std::string expect_ident(const char* ctx) {
    if (!cur().is(TokKind::Ident)) fail(std::string("expected identifier in ") + ctx);
    std::string name = cur().text;
    advance();
    return name;
  }

  std::string qualified_name() {
    std::string name = expect_ident("qualified name");
    while (cur().is_punct(".") && peek().is(TokKind::Ident)) {
      advance();
      name += '.';
      name += cur().text;
      advance();
    }
    return name;
  }

  // --- modifiers & annotations -----------------------------------------------

  unsigned modifiers_and_annotations() {
    unsigned mods = 0;
    for (;;) {
      if (cur().is(TokKind::Ident) && kModifierWords.count(cur().text)) {
        if (cur().text == "public") mods |= kModPublic;
        else if (cur().text == "private") mods |= kModPrivate;
        else if (cur().text == "protected") mods |= kModProtected;
        else if (cur().text == "static") mods |= kModStatic;
        else if (cur().text == "final") mods |= kModFinal;
        else if (cur().text == "abstract") mods |= kModAbstract;
        advance();
        continue;
      }
      if (cur().is_punct("@") && peek().is(TokKind::Ident) &&
          peek().text != "interface") {
        advance();
        qualified_name();
        if (cur().is_punct("(")) skip_balanced("(", ")");
        continue;
      }
      return mods;
    }
  }

  void skip_balanced(const char* open, const char* close) {
    expect_punct(open, "balanced group");
    int depth = 1;
    while (depth > 0) {
      if (cur().is(TokKind::End)) fail("unterminated group");
      if (cur().is_punct(open)) ++depth;
      else if (cur().is_punct(close)) --depth;
      advance();
    }
  }

  // --- types -----------------------------------------------------------------

  TypeRef* parse_type() {
    std::size_t start = cur().span.begin;
    auto* t = tree_.make<TypeRef>();
    if (cur().is(TokKind::Ident) && kPrimitives.count(cur().text)) {
      t->name = cur().text;
      advance();
    } else if (cur().is(TokKind::Ident) && !kModifierWords.count(cur().text)) {
      t->name = qualified_name();
      if (cur().is_punct("<")) skip_generic_args();
    } else {
      fail("expected type");
    }
    while (cur().is_punct("[") && peek().is_punct("]")) {
      advance();
      advance();
      ++t->dims;
    }
    t->span = {start, last_end_};
    t->text = text_.substr(start, last_end_ - start);
    return t;
  }

  // Consumes a balanced <...> group, accepting only tokens that can occur in
  // a type-argument list so that `a < b` in expressions backtracks cleanly.
  void skip_generic_args() {
    expect_punct("<", "type arguments");
    int depth = 1;
    while (depth > 0) {
      const Token& t = cur();
      if (t.is_punct("<")) ++depth;
      else if (t.is_punct(">")) --depth;
      else if (t.is_punct(">>")) depth -= 2;
      else if (t.is_punct(">>>")) depth -= 3;
      else if (t.is(TokKind::Ident) || t.is_punct(",") || t.is_punct(".") ||
               t.is_punct("?") || t.is_punct("[") || t.is_punct("]") ||
               t.is_punct("&")) {
        // fine
      } else {
        fail("unexpected token in type arguments");
      }
      if (depth < 0) fail("unbalanced type arguments");
      advance();
    }
  }

  // --- opaque fallback ---------------------------------------------------------

  // Consumes one unsupported construct: through ';' at depth 0, or through a
  // balanced '}' not continued by else/while/catch/finally. Never consumes the
  // enclosing block's '}'.
  Opaque* opaque_chunk() {
    std::size_t start = cur().span.begin;
    std::set<std::string> idents;
    int depth = 0;
    int parens = 0;
    bool consumed = false;
    for (;;) {
      const Token& t = cur();
      if (t.is(TokKind::End)) {
        if (!consumed) fail("unreadable construct");
        break;
      }
      if (t.is_punct("}") && depth == 0) {
        if (!consumed) fail("unreadable construct");
        break;
      }
      if (t.is(TokKind::Ident)) idents.insert(t.text);
      if (t.is_punct("(")) ++parens;
      if (t.is_punct(")")) --parens;
      if (t.is_punct("{")) ++depth;
      if (t.is_punct("}")) {
        --depth;
        advance();
        consumed = true;
        if (depth == 0) {
          if (cur().is_ident("else") || cur().is_ident("while") ||
              cur().is_ident("catch") || cur().is_ident("finally"))
            continue;
          break;
        }
        continue;
      }
      if (t.is_punct(";") && depth == 0 && parens == 0) {
        advance();
        consumed = true;
        break;
      }
      advance();
      consumed = true;
    }
    auto* node = tree_.make<Opaque>();
    node->span = {start, last_end_};
    node->idents.assign(idents.begin(), idents.end());
    return node;
  }

  // --- declarations ------------------------------------------------------------

  Node* type_decl_or_opaque() {
    std::size_t save = pos_;
    try {
      return parse_type_decl();
    } catch (const ParseError&) {
      pos_ = save;
      try {
        return opaque_chunk();
      } catch (const ParseError&) {
        throw ParseError("unreadable top-level declaration", toks_[save].line,
                         toks_[save].col);
      }
    }
  }

  Node* parse_type_decl() {
    std::size_t start = cur().span.begin;
    unsigned mods = modifiers_and_annotations();
    if (accept_ident("class")) {
      auto* decl = tree_.make<ClassDecl>();
      decl->mods = mods;
      decl->name = expect_ident("class declaration");
      if (cur().is_punct("<")) skip_generic_args();
      if (accept_ident("extends")) decl->extends = parse_type();
      if (cur().is_ident("implements")) {
        decl->implements_kw = cur().span;
        advance();
        decl->implements.push_back(parse_type());
        while (accept_punct(",")) decl->implements.push_back(parse_type());
      }
      std::size_t body_start = cur().span.begin;
      expect_punct("{", "class body");
      while (!cur().is_punct("}")) {
        if (cur().is(TokKind::End)) fail("unterminated class body");
        if (accept_punct(";")) continue;
        Node* m = class_member(decl->name);
        if (m) decl->members.push_back(m);
      }
      advance();  // '}'
      decl->body = {body_start, last_end_};
      decl->span = {start, last_end_};
      return decl;
    }
    if (accept_ident("interface")) {
      auto* decl = tree_.make<InterfaceDecl>();
      decl->mods = mods;
      decl->name = expect_ident("interface declaration");
      if (cur().is_punct("<")) skip_generic_args();
      if (accept_ident("extends")) {
        decl->extends.push_back(parse_type());
        while (accept_punct(",")) decl->extends.push_back(parse_type());
      }
      expect_punct("{", "interface body");
      while (!cur().is_punct("}")) {
        if (cur().is(TokKind::End)) fail("unterminated interface body");
        if (accept_punct(";")) continue;
        Node* m = class_member("");
        if (m) decl->members.push_back(m);
      }
      advance();
      decl->span = {start, last_end_};
      return decl;
    }
    fail("expected type declaration");
  }

  Node* class_member(const std::string& class_name) {
    std::size_t save = pos_;
    try {
      std::size_t start = cur().span.begin;
      unsigned mods = modifiers_and_annotations();
      if (cur().is_ident("class") || cur().is_ident("interface")) {
        pos_ = save;
        return parse_type_decl();
      }
      if (cur().is_punct("{")) {
        // instance/static initializer block
        pos_ = save;
        return opaque_chunk();
      }
      // constructor
      if (cur().is(TokKind::Ident) && cur().text == class_name &&
          peek().is_punct("(")) {
        auto* ctor = tree_.make<ConstructorDecl>();
        ctor->mods = mods;
        ctor->name = expect_ident("constructor");
        ctor->params = param_list();
        skip_throws();
        ctor->body = parse_block();
        ctor->span = {start, last_end_};
        return ctor;
      }
      TypeRef* type = parse_type();
      std::string name = expect_ident("member declaration");
      if (cur().is_punct("(")) {
        auto* m = tree_.make<MethodDecl>();
        m->mods = mods;
        m->ret = type;
        m->name = name;
        m->params = param_list();
        skip_throws();
        if (accept_punct(";")) {
          m->body = nullptr;
        } else {
          m->body = parse_block();
        }
        m->span = {start, last_end_};
        return m;
      }
      auto* f = tree_.make<FieldDecl>();
      f->mods = mods;
      f->type = type;
      f->vars.push_back(declarator(name));
      while (accept_punct(",")) f->vars.push_back(declarator(expect_ident("field")));
      expect_punct(";", "field declaration");
      f->span = {start, last_end_};
      return f;
    } catch (const ParseError&) {
      pos_ = save;
      return opaque_chunk();
    }
  }

  VarDeclarator* declarator(std::string name) {
    auto* v = tree_.make<VarDeclarator>();
    // span starts at the name token just consumed
    std::size_t start = last_end_ - name.size();
    v->name = std::move(name);
    while (cur().is_punct("[") && peek().is_punct("]")) {
      advance();
      advance();
    }
    if (accept_punct("=")) v->init = parse_expression();
    v->span = {start, last_end_};
    return v;
  }

  std::vector<ParamDecl*> param_list() {
    expect_punct("(", "parameter list");
    std::vector<ParamDecl*> params;
    if (!cur().is_punct(")")) {
      do {
        std::size_t start = cur().span.begin;
        auto* p = tree_.make<ParamDecl>();
        modifiers_and_annotations();
        p->type = parse_type();
        accept_punct("...");
        p->name = expect_ident("parameter");
        while (cur().is_punct("[") && peek().is_punct("]")) {
          advance();
          advance();
        }
        p->span = {start, last_end_};
        params.push_back(p);
      } while (accept_punct(","));
    }
    expect_punct(")", "parameter list");
    return params;
  }

  void skip_throws() {
    if (accept_ident("throws")) {
      qualified_name();
      while (accept_punct(",")) qualified_name();
    }
  }

  // --- statements ----------------------------------------------------------------

  Block* parse_block() {
    std::size_t start = cur().span.begin;
    expect_punct("{", "block");
    auto* b = tree_.make<Block>();
    while (!cur().is_punct("}")) {
      if (cur().is(TokKind::End)) fail("unterminated block");
      Node* s = parse_statement();
      if (s) b->stmts.push_back(s);
    }
    advance();
    b->span = {start, last_end_};
    return b;
  }

  Node* parse_statement() {
    const Token& t = cur();
    if (t.is_punct(";")) {
      advance();
      return nullptr;
    }
    if (t.is_punct("{")) return parse_block();
    if (t.is(TokKind::Ident)) {
      const std::string& w = t.text;
      if (w == "if") return parse_if();
      if (w == "switch") return parse_switch();
      if (w == "for") return parse_for();
      if (w == "while") return parse_while();
      if (w == "return") return parse_return();
      if (w == "break") return parse_break();
      if (w == "try") return parse_try();
      if (kOpaqueStarters.count(w)) return opaque_chunk();
      if (peek().is_punct(":")) return opaque_chunk();  // labeled statement
    }
    return decl_or_expr_statement();
  }

  Node* parse_if() {
    std::size_t start = cur().span.begin;
    advance();  // if
    expect_punct("(", "if");
    auto* s = tree_.make<IfStmt>();
    s->cond = parse_expression();
    expect_punct(")", "if");
    s->then_stmt = parse_statement();
    if (!s->then_stmt) s->then_stmt = empty_block(last_end_);
    if (accept_ident("else")) {
      s->else_stmt = parse_statement();
      if (!s->else_stmt) s->else_stmt = empty_block(last_end_);
    }
    s->span = {start, last_end_};
    return s;
  }

  Block* empty_block(std::size_t at) {
    auto* b = tree_.make<Block>();
    b->span = {at, at};
    return b;
  }

  Node* parse_switch() {
    std::size_t start = cur().span.begin;
    advance();
    expect_punct("(", "switch");
    auto* s = tree_.make<SwitchStmt>();
    s->scrutinee = parse_expression();
    expect_punct(")", "switch");
    expect_punct("{", "switch body");
    while (!cur().is_punct("}")) {
      if (cur().is(TokKind::End)) fail("unterminated switch");
      std::size_t case_start = cur().span.begin;
      auto* c = tree_.make<SwitchCase>();
      if (accept_ident("case")) {
        c->label = parse_expression();
      } else if (accept_ident("default")) {
        c->label = nullptr;
      } else {
        fail("expected 'case' or 'default'");
      }
      expect_punct(":", "switch case");
      while (!cur().is_punct("}") && !cur().is_ident("case") &&
             !cur().is_ident("default")) {
        if (cur().is(TokKind::End)) fail("unterminated switch");
        Node* st = parse_statement();
        if (st) c->stmts.push_back(st);
      }
      c->span = {case_start, last_end_};
      s->cases.push_back(c);
    }
    advance();
    s->span = {start, last_end_};
    return s;
  }

  Node* parse_for() {
    std::size_t start = cur().span.begin;
    advance();
    expect_punct("(", "for");
    // try enhanced for first
    std::size_t save = pos_;
    try {
      unsigned mods = modifiers_and_annotations();
      TypeRef* type = parse_type();
      std::string name = expect_ident("for-each");
      std::size_t name_end = last_end_;
      if (accept_punct(":")) {
        auto* fe = tree_.make<ForEachStmt>();
        auto* decl = tree_.make<LocalVarDecl>();
        decl->mods = mods;
        decl->type = type;
        auto* v = tree_.make<VarDeclarator>();
        v->name = name;
        v->span = {name_end - name.size(), name_end};
        decl->vars.push_back(v);
        decl->span = {type->span.begin, v->span.end};
        fe->decl = decl;
        fe->iterable = parse_expression();
        expect_punct(")", "for-each");
        fe->body = parse_statement();
        if (!fe->body) fe->body = empty_block(last_end_);
        fe->span = {start, last_end_};
        return fe;
      }
      pos_ = save;
    } catch (const ParseError&) {
      pos_ = save;
    }
    auto* f = tree_.make<ForStmt>();
    if (!cur().is_punct(";")) {
      Node* init = local_var_decl_opt();
      if (init) {
        f->init.push_back(init);
      } else {
        f->init.push_back(parse_expression());
        while (accept_punct(",")) f->init.push_back(parse_expression());
      }
    }
    expect_punct(";", "for");
    if (!cur().is_punct(";")) f->cond = parse_expression();
    expect_punct(";", "for");
    if (!cur().is_punct(")")) {
      f->updates.push_back(parse_expression());
      while (accept_punct(",")) f->updates.push_back(parse_expression());
    }
    expect_punct(")", "for");
    f->body = parse_statement();
    if (!f->body) f->body = empty_block(last_end_);
    f->span = {start, last_end_};
    return f;
  }

  Node* parse_while() {
    std::size_t start = cur().span.begin;
    advance();
    expect_punct("(", "while");
    auto* w = tree_.make<WhileStmt>();
    w->cond = parse_expression();
    expect_punct(")", "while");
    w->body = parse_statement();
    if (!w->body) w->body = empty_block(last_end_);
    w->span = {start, last_end_};
    return w;
  }

  Node* parse_return() {
    std::size_t start = cur().span.begin;
    advance();
    auto* r = tree_.make<ReturnStmt>();
    if (!cur().is_punct(";")) r->value = parse_expression();
    expect_punct(";", "return");
    r->span = {start, last_end_};
    return r;
  }

  Node* parse_break() {
    if (peek().is(TokKind::Ident)) return opaque_chunk();  // labeled break
    std::size_t start = cur().span.begin;
    advance();
    expect_punct(";", "break");
    auto* b = tree_.make<BreakStmt>();
    b->span = {start, last_end_};
    return b;
  }

  Node* parse_try() {
    if (peek().is_punct("(")) return opaque_chunk();  // try-with-resources
    std::size_t start = cur().span.begin;
    advance();
    auto* t = tree_.make<TryStmt>();
    t->body = parse_block();
    while (cur().is_ident("catch") || cur().is_ident("finally")) {
      t->handlers.push_back(opaque_handler());
    }
    t->span = {start, last_end_};
    return t;
  }

  // One catch/finally clause as an Opaque node.
  Opaque* opaque_handler() {
    std::size_t start = cur().span.begin;
    std::set<std::string> idents;
    advance();  // catch | finally
    if (cur().is_punct("(")) {
      int depth = 0;
      do {
        if (cur().is(TokKind::Ident)) idents.insert(cur().text);
        if (cur().is_punct("(")) ++depth;
        if (cur().is_punct(")")) --depth;
        advance();
      } while (depth > 0 && !cur().is(TokKind::End));
    }
    if (!cur().is_punct("{")) fail("expected block in catch/finally");
    int depth = 0;
    do {
      if (cur().is(TokKind::Ident)) idents.insert(cur().text);
      if (cur().is_punct("{")) ++depth;
      if (cur().is_punct("}")) --depth;
      advance();
    } while (depth > 0 && !cur().is(TokKind::End));
    auto* o = tree_.make<Opaque>();
    o->span = {start, last_end_};
    o->idents.assign(idents.begin(), idents.end());
    return o;
  }

  // Returns a LocalVarDecl if the lookahead reads as one, else null.
  LocalVarDecl* local_var_decl_opt() {
    std::size_t save = pos_;
    std::size_t start = cur().span.begin;
    try {
      unsigned mods = modifiers_and_annotations();
      TypeRef* type = parse_type();
      if (!cur().is(TokKind::Ident)) {
        pos_ = save;
        return nullptr;
      }
      std::string name = cur().text;
      const Token& after = peek();
      if (!(after.is_punct("=") || after.is_punct(";") || after.is_punct(",") ||
            (after.is_punct("[") && peek(2).is_punct("]")))) {
        pos_ = save;
        return nullptr;
      }
      advance();
      auto* d = tree_.make<LocalVarDecl>();
      d->mods = mods;
      d->type = type;
      d->vars.push_back(declarator(name));
      while (accept_punct(",")) d->vars.push_back(declarator(expect_ident("declaration")));
      d->span = {start, last_end_};
      return d;
    } catch (const ParseError&) {
      pos_ = save;
      return nullptr;
    }
  }

  Node* decl_or_expr_statement() {
    std::size_t save = pos_;
    std::size_t start = cur().span.begin;
    LocalVarDecl* decl = local_var_decl_opt();
    if (decl) {
      if (!accept_punct(";")) {
        pos_ = save;
        return opaque_chunk();
      }
      decl->span.end = last_end_;
      return decl;
    }
    try {
      Node* e = parse_expression();
      expect_punct(";", "expression statement");
      auto* s = tree_.make<ExprStmt>();
      s->expr = e;
      s->span = {start, last_end_};
      return s;
    } catch (const ParseError&) {
      pos_ = save;
      return opaque_chunk();
    }
  }

  // --- expressions ---------------------------------------------------------------

  Node* parse_expression() { return parse_assignment(); }

  bool lambda_ahead() {
    if (cur().is(TokKind::Ident) && !kPrimitives.count(cur().text) &&
        peek().is_punct("->"))
      return true;
    if (!cur().is_punct("(")) return false;
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].is_punct("(")) ++depth;
      else if (toks_[i].is_punct(")")) {
        --depth;
        if (depth == 0) return i + 1 < toks_.size() && toks_[i + 1].is_punct("->");
      } else if (toks_[i].is(TokKind::End)) {
        return false;
      }
    }
    return false;
  }

  Node* parse_lambda() {
    std::size_t start = cur().span.begin;
    auto* l = tree_.make<Lambda>();
    if (cur().is(TokKind::Ident)) {
      auto* p = tree_.make<ParamDecl>();
      p->span = cur().span;
      p->name = cur().text;
      advance();
      l->params.push_back(p);
    } else {
      expect_punct("(", "lambda");
      if (!cur().is_punct(")")) {
        do {
          std::size_t pstart = cur().span.begin;
          auto* p = tree_.make<ParamDecl>();
          // typed or untyped parameter
          if (peek().is(TokKind::Ident)) {
            p->type = parse_type();
            p->name = expect_ident("lambda parameter");
          } else {
            p->name = expect_ident("lambda parameter");
          }
          p->span = {pstart, last_end_};
          l->params.push_back(p);
        } while (accept_punct(","));
      }
      expect_punct(")", "lambda");
    }
    expect_punct("->", "lambda");
    if (cur().is_punct("{")) {
      l->body = parse_block();
    } else {
      l->body = parse_expression();
    }
    l->span = {start, last_end_};
    return l;
  }

  Node* parse_assignment() {
    if (lambda_ahead()) return parse_lambda();
    std::size_t start = cur().span.begin;
    Node* lhs = parse_ternary();
    static const std::set<std::string> kAssignOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
    if (cur().is(TokKind::Punct) && kAssignOps.count(cur().text)) {
      auto* a = tree_.make<Assign>();
      a->target = lhs;
      a->op = cur().text;
      advance();
      a->value = parse_assignment();
      a->span = {start, last_end_};
      return a;
    }
    return lhs;
  }

  Node* parse_ternary() {
    std::size_t start = cur().span.begin;
    Node* c = parse_binary(0);
    if (accept_punct("?")) {
      auto* t = tree_.make<Ternary>();
      t->cond = c;
      t->then_expr = parse_expression();
      expect_punct(":", "conditional expression");
      t->else_expr = parse_ternary();
      t->span = {start, last_end_};
      return t;
    }
    return c;
  }

  // Precedence-climbing over the binary operator tiers.
  Node* parse_binary(int level) {
    static const std::vector<std::vector<std::string>> kTiers = {
        {"||"}, {"&&"}, {"|"}, {"^"}, {"&"},
        {"==", "!="},
        {"<", ">", "<=", ">=", "instanceof"},
        {"<<", ">>", ">>>"},
        {"+", "-"},
        {"*", "/", "%"},
    };
    if (level >= static_cast<int>(kTiers.size())) return parse_unary();
    std::size_t start = cur().span.begin;
    Node* lhs = parse_binary(level + 1);
    for (;;) {
      const auto& ops = kTiers[level];
      bool matched = false;
      for (const auto& op : ops) {
        if (op == "instanceof" ? cur().is_ident("instanceof")
                               : cur().is_punct(op.c_str())) {
          if (op == "instanceof") {
            advance();
            auto* io = tree_.make<InstanceOf>();
            io->value = lhs;
            io->type = parse_type();
            io->span = {start, last_end_};
            lhs = io;
          } else {
            advance();
            auto* b = tree_.make<Binary>();
            b->lhs = lhs;
            b->op = op;
            b->rhs = parse_binary(level + 1);
            b->span = {start, last_end_};
            lhs = b;
          }
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  Node* parse_unary() {
    std::size_t start = cur().span.begin;
    for (const char* op : {"!", "~", "++", "--", "+", "-"}) {
      if (cur().is_punct(op)) {
        advance();
        auto* u = tree_.make<Unary>();
        u->op = op;
        u->prefix = true;
        u->operand = parse_unary();
        u->span = {start, last_end_};
        return u;
      }
    }
    // cast
    if (cur().is_punct("(")) {
      std::size_t save = pos_;
      try {
        advance();
        TypeRef* type = parse_type();
        if (cur().is_punct(")")) {
          bool primitive = kPrimitives.count(type->name) > 0;
          const Token& next = peek();
          bool operand_follows =
              next.is(TokKind::Ident) || next.is(TokKind::String) ||
              next.is(TokKind::Number) || next.is(TokKind::Char) ||
              next.is_punct("(") || next.is_punct("!") || next.is_punct("~");
          if (primitive || operand_follows) {
            advance();  // ')'
            auto* c = tree_.make<Cast>();
            c->type = type;
            c->value = parse_unary();
            c->span = {start, last_end_};
            return c;
          }
        }
        pos_ = save;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    return parse_postfix();
  }

  Node* parse_postfix() {
    std::size_t start = cur().span.begin;
    Node* e = parse_primary();
    for (;;) {
      if (cur().is_punct(".") && peek().is(TokKind::Ident)) {
        advance();
        std::string name = cur().text;
        advance();
        if (cur().is_punct("(")) {
          auto* call = tree_.make<MethodCall>();
          call->receiver = e;
          call->name = std::move(name);
          call->args = arg_list();
          call->span = {start, last_end_};
          e = call;
        } else {
          auto* fa = tree_.make<FieldAccess>();
          fa->base = e;
          fa->name = std::move(name);
          fa->span = {start, last_end_};
          e = fa;
        }
        continue;
      }
      if (cur().is_punct("++") || cur().is_punct("--")) {
        auto* u = tree_.make<Unary>();
        u->op = cur().text;
        u->prefix = false;
        u->operand = e;
        advance();
        u->span = {start, last_end_};
        e = u;
        continue;
      }
      if (cur().is_punct("[") || cur().is_punct("::"))
        fail("unsupported postfix expression");
      return e;
    }
  }

  std::vector<Node*> arg_list() {
    expect_punct("(", "arguments");
    std::vector<Node*> args;
    if (!cur().is_punct(")")) {
      args.push_back(parse_expression());
      while (accept_punct(",")) args.push_back(parse_expression());
    }
    expect_punct(")", "arguments");
    return args;
  }

  Node* parse_primary() {
    const Token& t = cur();
    std::size_t start = t.span.begin;
    switch (t.kind) {
      case TokKind::Number: {
        auto* n = tree_.make<NumberLit>();
        n->text = t.text;
        advance();
        n->span = {start, last_end_};
        return n;
      }
      case TokKind::String: {
        auto* n = tree_.make<StringLit>();
        n->value = t.text;
        advance();
        n->span = {start, last_end_};
        return n;
      }
      case TokKind::Char: {
        auto* n = tree_.make<CharLit>();
        n->value = t.text;
        advance();
        n->span = {start, last_end_};
        return n;
      }
      case TokKind::Ident:
        break;
      case TokKind::Punct:
        if (t.is_punct("(")) {
          advance();
          Node* inner = parse_expression();
          expect_punct(")", "parenthesized expression");
          return inner;
        }
        fail("expected expression");
      default:
        fail("expected expression");
    }
    const std::string& w = t.text;
    if (w == "true" || w == "false") {
      auto* n = tree_.make<BoolLit>();
      n->value = w == "true";
      advance();
      n->span = {start, last_end_};
      return n;
    }
    if (w == "null") {
      auto* n = tree_.make<NullLit>();
      advance();
      n->span = {start, last_end_};
      return n;
    }
    if (w == "new") return parse_new();
    // plain identifier, this, super, or unqualified call
    auto make_ident = [&]() {
      auto* n = tree_.make<Identifier>();
      n->name = w;
      advance();
      n->span = {start, last_end_};
      return n;
    };
    if (peek().is_punct("(") && w != "this" && w != "super") {
      auto* call = tree_.make<MethodCall>();
      call->name = w;
      advance();
      call->args = arg_list();
      call->span = {start, last_end_};
      return call;
    }
    return make_ident();
  }

  Node* parse_new() {
    std::size_t start = cur().span.begin;
    advance();  // new
    TypeRef* type = parse_type();
    if (cur().is_punct("[")) fail("array creation unsupported");
    auto* n = tree_.make<New>();
    n->type = type;
    n->args = arg_list();
    if (cur().is_punct("{")) {
      n->is_anon = true;
      advance();
      while (!cur().is_punct("}")) {
        if (cur().is(TokKind::End)) fail("unterminated anonymous class body");
        if (accept_punct(";")) continue;
        Node* m = class_member("");
        if (m) n->anon_members.push_back(m);
      }
      advance();
    }
    n->span = {start, last_end_};
    return n;
  }
};

}  // namespace

SyntaxTree parse(const std::string& text) {
  std::vector<Token> toks = lex(text);
  // Brace balance is the hard precondition for Opaque recovery.
  std::vector<const Token*> open;
  for (const Token& t : toks) {
    if (t.is_punct("{")) open.push_back(&t);
    if (t.is_punct("}")) {
      if (open.empty()) throw ParseError("unbalanced '}'", t.line, t.col);
      open.pop_back();
    }
  }
  if (!open.empty())
    throw ParseError("unbalanced '{'", open.back()->line, open.back()->col);

  SyntaxTree tree;
  Parser parser(text, std::move(toks), tree);
  tree.root = parser.run();
  tree.link_parents();
  return tree;
}

}  // namespace bloblint
