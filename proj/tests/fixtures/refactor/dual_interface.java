class EditorController implements ActionListener, CaretListener {
  JButton saveButton;
  JButton printButton;
  Document document;
  boolean hasSelection;

  EditorController() {
    saveButton = new JButton();
    saveButton.setActionCommand("save");
    saveButton.addActionListener(this);
    printButton = new JButton();
    printButton.setActionCommand("print");
    printButton.addActionListener(this);
  }

  public void actionPerformed(ActionEvent e) {
    if (e.getActionCommand().equals("save")) {
      document.save();
    } else if (e.getActionCommand().equals("print")) {
      document.print();
    }
  }

  public void caretUpdate(CaretEvent e) {
    hasSelection = e.getDot() != e.getMark();
  }
}
