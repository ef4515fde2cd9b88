#include "bloblint/catalog.hpp"

#include <fstream>
#include <sstream>

namespace bloblint {

namespace {

// Built-in defaults. Same line format as extension files:
//   listener <toolkit> <qualified-interface> <method>:<EventType> ...
//   adapter  <toolkit> <qualified-class> <listener-interface>
//   widget   <toolkit> <qualified-type>
//   register <widget> <method> <listener-interface>
//   identity <widget> <setter> <getter>
// Entries are unique by (toolkit, interface) / (toolkit, widget type).
// Simple-name lookups return the first declaration; keep ambiguous names
// (KeyListener, MouseListener, Button) ordered most-common-first.
const char* kBuiltins = R"(
# --- Swing -------------------------------------------------------------
listener swing java.awt.event.ActionListener actionPerformed:ActionEvent
listener swing java.awt.event.MouseListener mouseClicked:MouseEvent mousePressed:MouseEvent mouseReleased:MouseEvent mouseEntered:MouseEvent mouseExited:MouseEvent
listener swing java.awt.event.MouseMotionListener mouseDragged:MouseEvent mouseMoved:MouseEvent
listener swing java.awt.event.KeyListener keyTyped:KeyEvent keyPressed:KeyEvent keyReleased:KeyEvent
listener swing java.awt.event.FocusListener focusGained:FocusEvent focusLost:FocusEvent
listener swing java.awt.event.WindowListener windowOpened:WindowEvent windowClosing:WindowEvent windowClosed:WindowEvent windowIconified:WindowEvent windowDeiconified:WindowEvent windowActivated:WindowEvent windowDeactivated:WindowEvent
listener swing java.awt.event.ItemListener itemStateChanged:ItemEvent
listener swing javax.swing.event.CaretListener caretUpdate:CaretEvent
listener swing javax.swing.event.ChangeListener stateChanged:ChangeEvent
listener swing javax.swing.event.ListSelectionListener valueChanged:ListSelectionEvent
listener swing javax.swing.event.DocumentListener insertUpdate:DocumentEvent removeUpdate:DocumentEvent changedUpdate:DocumentEvent

adapter swing java.awt.event.MouseAdapter MouseListener
adapter swing java.awt.event.KeyAdapter KeyListener
adapter swing java.awt.event.WindowAdapter WindowListener
adapter swing java.awt.event.FocusAdapter FocusListener
adapter swing java.awt.event.MouseMotionAdapter MouseMotionListener

widget swing javax.swing.AbstractButton
widget swing javax.swing.JButton
widget swing javax.swing.JMenuItem
widget swing javax.swing.JCheckBoxMenuItem
widget swing javax.swing.JRadioButtonMenuItem
widget swing javax.swing.JCheckBox
widget swing javax.swing.JRadioButton
widget swing javax.swing.JToggleButton
widget swing javax.swing.JComboBox
widget swing javax.swing.JTextField
widget swing javax.swing.JTextArea
widget swing javax.swing.JSlider
widget swing javax.swing.JSpinner
widget swing javax.swing.JList
widget swing javax.swing.JTable

register AbstractButton addActionListener ActionListener
register AbstractButton addItemListener ItemListener
register AbstractButton addChangeListener ChangeListener
register JButton addActionListener ActionListener
register JButton addItemListener ItemListener
register JButton addChangeListener ChangeListener
register JMenuItem addActionListener ActionListener
register JMenuItem addItemListener ItemListener
register JCheckBoxMenuItem addActionListener ActionListener
register JCheckBoxMenuItem addItemListener ItemListener
register JRadioButtonMenuItem addActionListener ActionListener
register JRadioButtonMenuItem addItemListener ItemListener
register JCheckBox addActionListener ActionListener
register JCheckBox addItemListener ItemListener
register JCheckBox addChangeListener ChangeListener
register JRadioButton addActionListener ActionListener
register JRadioButton addItemListener ItemListener
register JToggleButton addActionListener ActionListener
register JToggleButton addItemListener ItemListener
register JComboBox addActionListener ActionListener
register JComboBox addItemListener ItemListener
register JTextField addActionListener ActionListener
register JTextField addCaretListener CaretListener
register JTextArea addCaretListener CaretListener
register JSlider addChangeListener ChangeListener
register JSpinner addChangeListener ChangeListener
register JList addListSelectionListener ListSelectionListener

identity AbstractButton setActionCommand getActionCommand
identity JButton setActionCommand getActionCommand
identity JMenuItem setActionCommand getActionCommand
identity JCheckBoxMenuItem setActionCommand getActionCommand
identity JRadioButtonMenuItem setActionCommand getActionCommand
identity JCheckBox setActionCommand getActionCommand
identity JRadioButton setActionCommand getActionCommand
identity JToggleButton setActionCommand getActionCommand
identity JComboBox setActionCommand getActionCommand
identity JTextField setActionCommand getActionCommand
identity AbstractButton setName getName
identity JButton setName getName
identity JMenuItem setName getName
identity JCheckBoxMenuItem setName getName
identity JRadioButtonMenuItem setName getName
identity JCheckBox setName getName
identity JRadioButton setName getName
identity JToggleButton setName getName
identity JComboBox setName getName
identity JTextField setName getName
identity JTextArea setName getName
identity JSlider setName getName
identity JSpinner setName getName
identity JList setName getName
identity JTable setName getName

# --- SWT ---------------------------------------------------------------
listener swt org.eclipse.swt.events.SelectionListener widgetSelected:SelectionEvent widgetDefaultSelected:SelectionEvent
listener swt org.eclipse.swt.events.ModifyListener modifyText:ModifyEvent
listener swt org.eclipse.swt.events.KeyListener keyPressed:KeyEvent keyReleased:KeyEvent
listener swt org.eclipse.swt.events.MouseListener mouseDoubleClick:MouseEvent mouseDown:MouseEvent mouseUp:MouseEvent
listener swt org.eclipse.swt.events.FocusListener focusGained:FocusEvent focusLost:FocusEvent
listener swt org.eclipse.swt.widgets.Listener handleEvent:Event

adapter swt org.eclipse.swt.events.SelectionAdapter SelectionListener
adapter swt org.eclipse.swt.events.MouseAdapter org.eclipse.swt.events.MouseListener
adapter swt org.eclipse.swt.events.KeyAdapter org.eclipse.swt.events.KeyListener

widget swt org.eclipse.swt.widgets.Button
widget swt org.eclipse.swt.widgets.MenuItem
widget swt org.eclipse.swt.widgets.Text
widget swt org.eclipse.swt.widgets.Combo
widget swt org.eclipse.swt.widgets.List
widget swt org.eclipse.swt.widgets.Table
widget swt org.eclipse.swt.widgets.Tree
widget swt org.eclipse.swt.widgets.ToolItem
widget swt org.eclipse.swt.widgets.Scale

register Button addSelectionListener SelectionListener
register MenuItem addSelectionListener SelectionListener
register Combo addSelectionListener SelectionListener
register List addSelectionListener SelectionListener
register Table addSelectionListener SelectionListener
register Tree addSelectionListener SelectionListener
register ToolItem addSelectionListener SelectionListener
register Scale addSelectionListener SelectionListener
register Text addModifyListener ModifyListener
register Text addKeyListener org.eclipse.swt.events.KeyListener
register Button addListener org.eclipse.swt.widgets.Listener
register Text addListener org.eclipse.swt.widgets.Listener

identity Button setData getData
identity MenuItem setData getData
identity Text setData getData

# --- JavaFX ------------------------------------------------------------
listener javafx javafx.event.EventHandler handle:Event
listener javafx javafx.beans.InvalidationListener invalidated:Observable

widget javafx javafx.scene.control.Button
widget javafx javafx.scene.control.MenuItem
widget javafx javafx.scene.control.TextField
widget javafx javafx.scene.control.CheckBox
widget javafx javafx.scene.control.ComboBox
widget javafx javafx.scene.control.Slider
widget javafx javafx.scene.control.ToggleButton
widget javafx javafx.scene.control.RadioButton

register javafx.scene.control.Button setOnAction EventHandler
register javafx.scene.control.Button setOnMouseClicked EventHandler
register javafx.scene.control.Button setOnKeyPressed EventHandler
register javafx.scene.control.MenuItem setOnAction EventHandler
register javafx.scene.control.TextField setOnAction EventHandler
register javafx.scene.control.TextField setOnKeyPressed EventHandler
register javafx.scene.control.CheckBox setOnAction EventHandler
register javafx.scene.control.ComboBox setOnAction EventHandler
register javafx.scene.control.ToggleButton setOnAction EventHandler
register javafx.scene.control.RadioButton setOnAction EventHandler

identity javafx.scene.control.Button setId getId
identity javafx.scene.control.MenuItem setId getId
identity javafx.scene.control.TextField setId getId
identity javafx.scene.control.CheckBox setId getId
identity javafx.scene.control.ComboBox setId getId
identity javafx.scene.control.Slider setId getId
identity javafx.scene.control.ToggleButton setId getId
identity javafx.scene.control.RadioButton setId getId
)";

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> parts;
  std::istringstream ss(line);
  std::string word;
  while (ss >> word) parts.push_back(word);
  return parts;
}

}  // namespace

std::vector<const ListenerSpec*> Catalog::listener_candidates(const std::string& name) const {
  std::vector<const ListenerSpec*> out;
  for (const auto& l : listeners_)
    if (l.matches_name(name)) out.push_back(&l);
  return out;
}

const ListenerSpec* Catalog::listener_by_name(const std::string& name) const {
  for (const auto& l : listeners_)
    if (l.matches_name(name)) return &l;
  return nullptr;
}

const ListenerSpec* Catalog::adapter_interface(const std::string& name) const {
  for (const auto& [adapter, spec] : adapters_) {
    if (adapter == name) return spec;
    auto pos = adapter.rfind('.');
    if (pos != std::string::npos && adapter.substr(pos + 1) == name) return spec;
  }
  return nullptr;
}

const WidgetSpec* Catalog::widget_by_name(const std::string& name) const {
  for (const auto& w : widgets_)
    if (w.matches_name(name)) return &w;
  return nullptr;
}

std::vector<const ListenerSpec*> Catalog::registration_targets(const std::string& method) const {
  std::vector<const ListenerSpec*> out;
  auto it = registration_index_.find(method);
  if (it == registration_index_.end()) return out;
  for (const auto& l : listeners_)  // deterministic declaration order
    if (it->second.count(&l)) out.push_back(&l);
  return out;
}

void Catalog::merge(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& msg) -> CatalogError {
    return CatalogError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> parts = split_ws(line);
    if (parts.empty()) continue;
    const std::string& directive = parts[0];

    if (directive == "listener") {
      if (parts.size() < 4) throw err("listener needs: toolkit, name, method:EventType...");
      ListenerSpec spec;
      spec.toolkit = parts[1];
      spec.qualified_name = parts[2];
      for (std::size_t i = 3; i < parts.size(); ++i) {
        auto colon = parts[i].find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == parts[i].size())
          throw err("handler must be <method>:<EventType>: " + parts[i]);
        spec.methods.push_back({parts[i].substr(0, colon), parts[i].substr(colon + 1)});
      }
      for (const auto& l : listeners_)
        if (l.toolkit == spec.toolkit && l.qualified_name == spec.qualified_name)
          throw err("duplicate listener " + spec.toolkit + "/" + spec.qualified_name);
      listeners_.push_back(std::move(spec));
    } else if (directive == "adapter") {
      if (parts.size() != 4) throw err("adapter needs: toolkit, class, interface");
      const ListenerSpec* target = nullptr;
      for (const auto& l : listeners_)
        if (l.toolkit == parts[1] && l.matches_name(parts[3])) target = &l;
      if (!target) throw err("adapter references unknown listener " + parts[3]);
      auto [it, inserted] = adapters_.emplace(parts[2], target);
      if (!inserted) throw err("duplicate adapter " + parts[2]);
    } else if (directive == "widget") {
      if (parts.size() != 3) throw err("widget needs: toolkit, type");
      for (const auto& w : widgets_)
        if (w.toolkit == parts[1] && w.qualified_name == parts[2])
          throw err("duplicate widget " + parts[1] + "/" + parts[2]);
      WidgetSpec spec;
      spec.toolkit = parts[1];
      spec.qualified_name = parts[2];
      widgets_.push_back(std::move(spec));
    } else if (directive == "register" || directive == "identity") {
      if (parts.size() != 4) throw err(directive + " needs: widget, two names");
      WidgetSpec* widget = nullptr;
      for (auto& w : widgets_)
        if (w.matches_name(parts[1])) {
          widget = &w;
          break;
        }
      if (!widget) throw err("unknown widget " + parts[1]);
      if (directive == "register") {
        const ListenerSpec* target = nullptr;
        for (const auto& l : listeners_)
          if (l.matches_name(parts[3]) &&
              (l.toolkit == widget->toolkit || parts[3] == l.qualified_name))
            target = &l;
        if (!target) throw err("unknown listener " + parts[3]);
        if (const RegistrationSpec* existing = widget->registration(parts[2]);
            existing && existing->listener != target)
          throw err("registration method " + parts[2] + " already maps to " +
                    existing->listener->qualified_name);
        widget->registrations.push_back({parts[2], target});
        registration_index_[parts[2]].insert(target);
      } else {
        widget->identities.push_back({parts[2], parts[3]});
        identity_setters_.insert(parts[2]);
        identity_getters_.insert(parts[3]);
      }
    } else {
      throw err("unknown directive '" + directive + "'");
    }
  }
}

Catalog builtin_catalog() {
  Catalog catalog;
  catalog.merge(kBuiltins, "<builtin>");
  return catalog;
}

Catalog load_catalog(const std::string& extension_path) {
  Catalog catalog = builtin_catalog();
  if (!extension_path.empty()) {
    std::ifstream in(extension_path, std::ios::binary);
    if (!in) throw CatalogError("cannot read catalog file: " + extension_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    catalog.merge(ss.str(), extension_path);
  }
  return catalog;
}

}  // namespace bloblint
