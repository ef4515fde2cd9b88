class DialogController implements ActionListener {
  static final String SHOW_CMD = "show";
  static final String RESET_CMD = "reset";
  JFileChooser chooser;

  public DialogController() {
    chooser = new JFileChooser();
    chooser.setMultiSelectionEnabled(false);
  }

  public void actionPerformed(ActionEvent e) {
    if (SHOW_CMD.equals(e.getActionCommand())) {
      chooser.showDialog(null, "title");
    } else if (RESET_CMD.equals(e.getActionCommand())) {
      chooser.setSelectedFile(null);
    }
  }
}

class DialogPanel {
  JButton showButton;
  JButton resetButton;
  DialogController controller;

  public DialogPanel() {
    controller = new DialogController();
    showButton = new JButton();
    showButton.setActionCommand(DialogController.SHOW_CMD);
    showButton.addActionListener(controller);
    resetButton = new JButton();
    resetButton.setActionCommand(DialogController.RESET_CMD);
    resetButton.addActionListener(controller);
  }
}
