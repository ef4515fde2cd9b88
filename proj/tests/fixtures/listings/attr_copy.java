class ChooserController implements ActionListener {
  static final String ACTION_CMD = "actionCmd";
  JFileChooser c;

  public ChooserController() {
    c = new JFileChooser();
    c.setMultiSelectionEnabled(false);
  }

  public void actionPerformed(ActionEvent e) {
    if (ACTION_CMD.equals(e.getActionCommand())) {
      c.showDialog(null, "title");
    }
  }
}

class ChooserPanel {
  JButton b;
  ChooserController controller;

  public ChooserPanel() {
    controller = new ChooserController();
    b = new JButton();
    b.setActionCommand(ChooserController.ACTION_CMD);
    b.addActionListener(controller);
  }
}
